//! Random circuit generation and benchmark sweeps across algorithms and
//! topologies, reported as CSV.
//!
//! # Overview
//!
//! A benchmark run is described by a [`BenchSpec`]: a set of catalog
//! topologies, a ladder of input gate counts, a circuit count per rung, an
//! algorithm subset, and a base seed. For every `(topology, gate count)`
//! pair the harness generates the same seeded circuits regardless of which
//! algorithms are enabled — each instance's generator seed mixes only the
//! base seed, topology name, gate count, and instance index — so algorithm
//! columns stay comparable across partial runs.
//!
//! Every synthesized circuit is verified (functional equivalence through the
//! returned map, plus per-gate connectivity legality) before it contributes
//! to the aggregates; a single failure aborts the sweep with the offending
//! instance named. Synthesis runs in parallel per instance, but records and
//! aggregation order are fixed, so identical specs produce byte-identical
//! CSV.
//!
//! # Example
//!
//! ```
//! use parityroute::bench::{run_bench, Algorithm, BenchSpec};
//!
//! let spec = BenchSpec {
//!     topologies: vec!["line3".into()],
//!     gate_counts: vec![2],
//!     circuits_per_case: 5,
//!     algorithms: vec![Algorithm::PermRowCol],
//!     seed: 1,
//!     ..BenchSpec::default()
//! };
//! let records = run_bench(&spec).unwrap();
//! assert_eq!(records.len(), 1);
//! ```

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::parity::{circuit_to_parity_matrix, verify_equivalence, CnotCircuit};
use crate::search::{astar_perm_row_col, reverse_traversal, AStarConfig, RtConfig};
use crate::synthesis::{perm_row_col, PivotPolicy, SynthesisResult};
use crate::topology::{builtin_topology, Topology};

/// The synthesis algorithms a benchmark (or the CLI) can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Fixed-diagonal elimination; identity output map.
    RowCol,
    /// Free-column elimination; permuted output map.
    PermRowCol,
    /// PermRowCol wrapped in reverse traversal.
    PermRowColRt,
    /// PermRowCol wrapped in the best-first pivot search.
    PermRowColAstar,
}

impl Algorithm {
    /// All algorithms, in canonical order.
    pub const ALL: [Algorithm; 4] = [
        Algorithm::RowCol,
        Algorithm::PermRowCol,
        Algorithm::PermRowColRt,
        Algorithm::PermRowColAstar,
    ];

    /// The identifier used on the command line and in CSV output.
    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::RowCol => "rowcol",
            Algorithm::PermRowCol => "permrowcol",
            Algorithm::PermRowColRt => "permrowcol-rt",
            Algorithm::PermRowColAstar => "permrowcol-astar",
        }
    }

    /// Synthesizes `c` over `g` with this algorithm.
    pub fn synthesize(
        &self,
        c: &CnotCircuit,
        g: &Topology,
        rt: RtConfig,
        astar: AStarConfig,
    ) -> Result<SynthesisResult> {
        match self {
            Algorithm::RowCol => {
                perm_row_col(&circuit_to_parity_matrix(c), g, PivotPolicy::fixed_diagonal())
            }
            Algorithm::PermRowCol => {
                perm_row_col(&circuit_to_parity_matrix(c), g, PivotPolicy::permuted())
            }
            Algorithm::PermRowColRt => reverse_traversal(c, g, rt, PivotPolicy::permuted()),
            Algorithm::PermRowColAstar => {
                astar_perm_row_col(&circuit_to_parity_matrix(c), g, astar)
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "unknown algorithm `{s}`; expected one of rowcol, permrowcol, \
                     permrowcol-rt, permrowcol-astar"
                ))
            })
    }
}

/// Description of one benchmark sweep.
#[derive(Debug, Clone)]
pub struct BenchSpec {
    /// Catalog names of the topologies to sweep.
    pub topologies: Vec<String>,
    /// Input gate counts (the `d` ladder).
    pub gate_counts: Vec<usize>,
    /// Circuits generated per `(topology, d)` pair.
    pub circuits_per_case: usize,
    /// Algorithms to run on every instance.
    pub algorithms: Vec<Algorithm>,
    /// Base seed; fixes the full run.
    pub seed: u64,
    /// Reverse-traversal settings for [`Algorithm::PermRowColRt`].
    pub rt: RtConfig,
    /// Pivot-search settings for [`Algorithm::PermRowColAstar`].
    pub astar: AStarConfig,
}

impl Default for BenchSpec {
    fn default() -> Self {
        BenchSpec {
            topologies: Vec::new(),
            gate_counts: Vec::new(),
            circuits_per_case: 100,
            algorithms: vec![Algorithm::RowCol, Algorithm::PermRowCol, Algorithm::PermRowColRt],
            seed: 0,
            rt: RtConfig::default(),
            astar: AStarConfig::default(),
        }
    }
}

/// One aggregated result row: an algorithm on a `(topology, d)` case.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub topology: String,
    pub qubits: usize,
    pub input_cnots: usize,
    pub algorithm: Algorithm,
    pub mean_output_cnots: f64,
    /// Signed percentage `100 · (output − input) / input`; negative when
    /// synthesis beats the input count.
    pub mean_overhead_pct: f64,
}

/// Draws `d` independent uniform CNOTs over `q` qubits.
///
/// Each gate is a uniform draw from the `q · (q − 1)` ordered
/// `(control, target)` pairs. The generator alone determines the circuit, so
/// a fixed seed reproduces it exactly.
///
/// # Errors
///
/// [`Error::InvalidConfig`] when `q < 2` and gates were requested.
pub fn random_cnot_circuit(q: usize, d: usize, rng: &mut impl Rng) -> Result<CnotCircuit> {
    if q < 2 && d > 0 {
        return Err(Error::InvalidConfig(format!(
            "cannot place CNOT gates on {q} qubit(s)"
        )));
    }
    let mut c = CnotCircuit::empty(q);
    for _ in 0..d {
        let control = rng.random_range(0..q);
        let mut target = rng.random_range(0..q - 1);
        if target >= control {
            target += 1;
        }
        c.push(control, target)?;
    }
    Ok(c)
}

/// The generator seed for one benchmark instance.
///
/// FNV-1a over (base seed, topology name, gate count, instance index) — the
/// algorithm is deliberately excluded so every algorithm sees identical
/// circuits.
fn instance_seed(base: u64, topology: &str, d: usize, index: usize) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut hash = OFFSET;
    let eat = |hash: &mut u64, bytes: &[u8]| {
        for &b in bytes {
            *hash ^= u64::from(b);
            *hash = hash.wrapping_mul(PRIME);
        }
    };
    eat(&mut hash, &base.to_le_bytes());
    eat(&mut hash, topology.as_bytes());
    eat(&mut hash, &(d as u64).to_le_bytes());
    eat(&mut hash, &(index as u64).to_le_bytes());
    hash
}

/// Runs a full benchmark sweep.
///
/// Record order is `(topology, gate count, algorithm)` in spec order.
/// Instances are synthesized in parallel; every output is verified for
/// functional equivalence and connectivity legality before aggregation.
///
/// # Errors
///
/// [`Error::Verification`] naming the failing instance if any output fails
/// its checks; [`Error::UnknownTopology`] / [`Error::InvalidConfig`] for bad
/// specs.
pub fn run_bench(spec: &BenchSpec) -> Result<Vec<BenchRecord>> {
    if spec.circuits_per_case == 0 {
        return Err(Error::InvalidConfig(
            "circuits per case must be at least 1".into(),
        ));
    }
    let mut records = Vec::new();
    for name in &spec.topologies {
        let g = builtin_topology(name)?;
        for &d in &spec.gate_counts {
            let circuits: Vec<CnotCircuit> = (0..spec.circuits_per_case)
                .map(|i| {
                    let mut rng =
                        ChaCha8Rng::seed_from_u64(instance_seed(spec.seed, name, d, i));
                    random_cnot_circuit(g.n(), d, &mut rng)
                })
                .collect::<Result<_>>()?;
            for &algorithm in &spec.algorithms {
                let counts: Vec<usize> = circuits
                    .par_iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let result = algorithm.synthesize(c, &g, spec.rt, spec.astar)?;
                        check_instance(c, &g, &result).map_err(|e| {
                            Error::Verification(format!(
                                "{algorithm} on {name} (d = {d}, instance {i}, \
                                 seed {}): {e}",
                                spec.seed
                            ))
                        })?;
                        Ok(result.gate_count())
                    })
                    .collect::<Result<_>>()?;
                let mean = counts.iter().sum::<usize>() as f64 / counts.len() as f64;
                let mean_overhead_pct = if d == 0 {
                    0.0
                } else {
                    100.0 * (mean - d as f64) / d as f64
                };
                records.push(BenchRecord {
                    topology: name.clone(),
                    qubits: g.n(),
                    input_cnots: d,
                    algorithm,
                    mean_output_cnots: mean,
                    mean_overhead_pct,
                });
            }
        }
    }
    Ok(records)
}

fn check_instance(c: &CnotCircuit, g: &Topology, result: &SynthesisResult) -> Result<()> {
    let m = circuit_to_parity_matrix(c);
    if !verify_equivalence(&m, &result.circuit, &result.map)? {
        return Err(Error::Verification("output is not equivalent".into()));
    }
    for gate in result.circuit.gates() {
        if !g.has_edge(gate.control, gate.target) {
            return Err(Error::Verification(format!(
                "gate cnot {} {} is not a topology edge",
                gate.control, gate.target
            )));
        }
    }
    Ok(())
}

/// Renders records as CSV with a fixed header and column order.
pub fn render_csv(records: &[BenchRecord]) -> String {
    let mut out =
        String::from("topology,qubits,input_cnots,algorithm,mean_output_cnots,mean_overhead_pct\n");
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{:.2},{:.2}",
            r.topology, r.qubits, r.input_cnots, r.algorithm, r.mean_output_cnots, r.mean_overhead_pct
        )
        .expect("writing to a String cannot fail");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_circuit_is_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(99);
        let mut b = ChaCha8Rng::seed_from_u64(99);
        let ca = random_cnot_circuit(9, 50, &mut a).unwrap();
        let cb = random_cnot_circuit(9, 50, &mut b).unwrap();
        assert_eq!(ca, cb);
    }

    #[test]
    fn random_circuit_edge_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(random_cnot_circuit(5, 0, &mut rng).unwrap().is_empty());
        assert!(random_cnot_circuit(1, 0, &mut rng).unwrap().is_empty());
        assert!(matches!(
            random_cnot_circuit(1, 3, &mut rng),
            Err(Error::InvalidConfig(_))
        ));
        let c = random_cnot_circuit(2, 10, &mut rng).unwrap();
        assert_eq!(c.len(), 10);
        for g in c.gates() {
            assert_ne!(g.control, g.target);
        }
    }

    #[test]
    fn random_circuit_pairs_are_uniform() {
        // Chi-square goodness-of-fit over the 72 ordered pairs of a 9-qubit
        // register at 10⁴ draws. 102.816 is the upper 1% point of χ² with
        // 71 degrees of freedom; exceeding it would reject uniformity.
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let c = random_cnot_circuit(9, 10_000, &mut rng).unwrap();
        let mut counts = [[0usize; 9]; 9];
        for g in c.gates() {
            counts[g.control][g.target] += 1;
        }
        let expected = 10_000.0 / 72.0;
        let mut chi2 = 0.0;
        for (i, row) in counts.iter().enumerate() {
            for (j, &n) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(n, 0);
                } else {
                    let diff = n as f64 - expected;
                    chi2 += diff * diff / expected;
                }
            }
        }
        assert!(chi2 < 102.816, "chi-square statistic {chi2} rejects uniformity");
    }

    #[test]
    fn algorithm_round_trips_names() {
        for algo in Algorithm::ALL {
            assert_eq!(algo.as_str().parse::<Algorithm>().unwrap(), algo);
        }
        assert!("permcol".parse::<Algorithm>().is_err());
    }

    #[test]
    fn bench_smoke_on_complete5() {
        let spec = BenchSpec {
            topologies: vec!["complete5".into()],
            gate_counts: vec![3],
            circuits_per_case: 20,
            algorithms: vec![Algorithm::RowCol],
            seed: 7,
            ..BenchSpec::default()
        };
        let records = run_bench(&spec).unwrap();
        assert_eq!(records.len(), 1);
        let r = &records[0];
        assert_eq!(r.qubits, 5);
        assert_eq!(r.input_cnots, 3);
        assert!(r.mean_overhead_pct >= -100.0);
    }

    #[test]
    fn circuits_identical_across_algorithm_subsets() {
        let base = BenchSpec {
            topologies: vec!["line5".into()],
            gate_counts: vec![6],
            circuits_per_case: 10,
            algorithms: vec![Algorithm::RowCol],
            seed: 42,
            ..BenchSpec::default()
        };
        let solo = run_bench(&base).unwrap();
        let both = run_bench(&BenchSpec {
            algorithms: vec![Algorithm::PermRowCol, Algorithm::RowCol],
            ..base.clone()
        })
        .unwrap();
        // The rowcol aggregate must be identical whether or not other
        // algorithms ran alongside it.
        let rowcol_solo = &solo[0];
        let rowcol_both = both
            .iter()
            .find(|r| r.algorithm == Algorithm::RowCol)
            .unwrap();
        assert_eq!(rowcol_solo, rowcol_both);
    }

    #[test]
    fn csv_is_reproducible() {
        let spec = BenchSpec {
            topologies: vec!["grid2x3".into(), "line3".into()],
            gate_counts: vec![2, 4],
            circuits_per_case: 5,
            algorithms: vec![Algorithm::PermRowCol, Algorithm::PermRowColRt],
            seed: 123,
            ..BenchSpec::default()
        };
        let a = render_csv(&run_bench(&spec).unwrap());
        let b = render_csv(&run_bench(&spec).unwrap());
        assert_eq!(a, b);
        assert!(a.starts_with(
            "topology,qubits,input_cnots,algorithm,mean_output_cnots,mean_overhead_pct\n"
        ));
        // Header plus one line per (topology, d, algorithm) combination.
        assert_eq!(a.lines().count(), 1 + 2 * 2 * 2);
    }

    #[test]
    fn bench_rejects_zero_circuits() {
        let spec = BenchSpec {
            topologies: vec!["line3".into()],
            gate_counts: vec![1],
            circuits_per_case: 0,
            ..BenchSpec::default()
        };
        assert!(matches!(run_bench(&spec), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn bench_unknown_topology_errors() {
        let spec = BenchSpec {
            topologies: vec!["moebius".into()],
            gate_counts: vec![1],
            circuits_per_case: 1,
            ..BenchSpec::default()
        };
        assert!(matches!(run_bench(&spec), Err(Error::UnknownTopology { .. })));
    }
}
