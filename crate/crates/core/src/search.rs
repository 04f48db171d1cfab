//! Meta-optimizers over the core synthesizer: reverse traversal and a
//! best-first pivot search.
//!
//! # Overview
//!
//! Plain synthesis starts from the identity placement and commits to one
//! pivot pair per round. Both choices leave gates on the table, and the two
//! strategies here attack them separately.
//!
//! [`reverse_traversal`] improves the *placement*. Synthesizing a circuit
//! yields an output qubit map; because CNOTs are self-inverse, running the
//! gates backwards computes the inverse function, so that map is a valid
//! starting placement for synthesizing the reversed circuit — and the map
//! that run produces seeds the next forward pass. Alternating direction for
//! a fixed number of passes and keeping the best forward result can only
//! improve on the plain run, which is itself pass zero.
//!
//! [`astar_perm_row_col`] improves the *pivot sequence*. It explores partial
//! synthesis states in a priority queue keyed by gates emitted so far,
//! expanding the top `choice_width` pivot pairs per state (ranked by the
//! standard row-then-column heuristics) and truncating the queue to
//! `max_queue` states. With an unbounded queue and full width it returns the
//! best circuit any pivot order can reach, at exponential cost; the bounded
//! defaults make it a beam-like search.
//!
//! # Example
//!
//! ```
//! use parityroute::parity::{circuit_to_parity_matrix, verify_equivalence, CnotCircuit};
//! use parityroute::search::{reverse_traversal, RtConfig};
//! use parityroute::synthesis::PivotPolicy;
//! use parityroute::topology::Topology;
//!
//! let c = CnotCircuit::from_gates(9, [(0, 8), (4, 2), (7, 3)]).unwrap();
//! let grid = Topology::grid(3, 3);
//! let result = reverse_traversal(&c, &grid, RtConfig::default(), PivotPolicy::permuted()).unwrap();
//! let m = circuit_to_parity_matrix(&c);
//! assert!(verify_equivalence(&m, &result.circuit, &result.map).unwrap());
//! ```

use crate::error::{Error, Result};
use crate::parity::{circuit_to_parity_matrix, CnotCircuit, ParityMatrix};
use crate::synthesis::{
    perm_row_col, ranked_columns, ranked_rows, synthesize_with_placement, PivotPolicy,
    SynthesisResult, WorkState,
};
use crate::topology::Topology;

/// Reverse-traversal configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RtConfig {
    /// Total synthesis passes, counting the initial forward pass; with
    /// `iterations = 1` the result equals plain synthesis.
    pub iterations: usize,
}

impl Default for RtConfig {
    fn default() -> Self {
        RtConfig { iterations: 10 }
    }
}

/// Pivot-search configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AStarConfig {
    /// Pivot pairs expanded per state; `1` degenerates to plain synthesis.
    pub choice_width: usize,
    /// Maximum queue length; the worst states beyond it are discarded.
    pub max_queue: usize,
}

impl Default for AStarConfig {
    fn default() -> Self {
        AStarConfig {
            choice_width: 4,
            max_queue: 10,
        }
    }
}

impl AStarConfig {
    /// Exhaustive search: every pivot pair expanded, nothing discarded.
    /// Exponential in the qubit count — intended for small instances.
    pub fn exhaustive() -> Self {
        AStarConfig {
            choice_width: usize::MAX,
            max_queue: usize::MAX,
        }
    }
}

/// Iteratively re-synthesizes `c`, feeding each pass's output map back in
/// as the next pass's placement, and returns the best forward-direction
/// result.
///
/// Pass 0 is plain synthesis of `c`. Odd passes synthesize the reversed
/// circuit (stepping stones that only produce the next placement); even
/// passes synthesize `c` again and compete for the best result by gate
/// count. Because pass 0 always competes, the result is never worse than
/// plain synthesis, and it always verifies against the original circuit.
///
/// # Errors
///
/// [`Error::InvalidConfig`] when `iterations` is zero, otherwise as
/// [`perm_row_col`].
pub fn reverse_traversal(
    c: &CnotCircuit,
    g: &Topology,
    cfg: RtConfig,
    policy: PivotPolicy,
) -> Result<SynthesisResult> {
    if cfg.iterations == 0 {
        return Err(Error::InvalidConfig(
            "reverse traversal needs at least one iteration".into(),
        ));
    }
    let m = circuit_to_parity_matrix(c);
    let mut best = perm_row_col(&m, g, policy)?;
    let mut placement = best.map.clone();
    let reversed = c.reversed();
    for pass in 1..cfg.iterations {
        let direction = if pass % 2 == 1 { &reversed } else { c };
        let result = synthesize_with_placement(direction, g, &placement, policy)?;
        placement = result.map.clone();
        if pass % 2 == 0 && result.gate_count() < best.gate_count() {
            best = result;
        }
    }
    Ok(best)
}

/// A queued partial synthesis state.
#[derive(Debug, Clone)]
struct SearchNode {
    state: WorkState,
    cost: usize,
    /// Monotone insertion counter; equal-cost states pop in FIFO order.
    seq: u64,
    complete: bool,
}

/// Best-first search over pivot sequences.
///
/// Starts from the unreduced matrix at cost 0 and repeatedly pops the
/// cheapest state (gates emitted so far; ties first-in-first-out), expanding
/// up to `choice_width` pivot pairs ranked row-first by the standard
/// heuristics. Each expansion performs one full column+row elimination.
/// After each expansion round the queue is truncated to `max_queue` states,
/// discarding the most expensive. The first fully reduced state popped is
/// returned.
///
/// Since the plain heuristic's pivot sequence is always among the expanded
/// pairs, the result never has more gates than plain synthesis when the
/// queue is unbounded.
///
/// # Errors
///
/// [`Error::InvalidConfig`] when either limit is zero, otherwise as
/// [`perm_row_col`].
pub fn astar_perm_row_col(
    m: &ParityMatrix,
    g: &Topology,
    cfg: AStarConfig,
) -> Result<SynthesisResult> {
    if cfg.choice_width == 0 {
        return Err(Error::InvalidConfig("choice width must be at least 1".into()));
    }
    if cfg.max_queue == 0 {
        return Err(Error::InvalidConfig("queue limit must be at least 1".into()));
    }
    let mut seq = 0u64;
    let mut root = SearchNode {
        state: WorkState::new(m, g)?,
        cost: 0,
        seq,
        complete: false,
    };
    if root.state.active_count() <= 1 {
        root.state.finalize_map()?;
        root.complete = true;
    }
    let mut queue = vec![root];

    while !queue.is_empty() {
        let node = queue.remove(0);
        if node.complete {
            return Ok(node.state.into_result());
        }

        let candidates = node.state.graph.non_cutting_vertices()?;
        let rows = ranked_rows(&node.state.matrix, &candidates)?;
        let unassigned = node.state.map.unassigned_logicals();
        let mut pairs = Vec::new();
        'collect: for &r in &rows {
            for c in ranked_columns(&node.state.matrix, r, &unassigned)? {
                pairs.push((r, c));
                if pairs.len() >= cfg.choice_width {
                    break 'collect;
                }
            }
        }

        for (r, c) in pairs {
            let mut state = node.state.clone();
            state.step(PivotPolicy::permuted(), Some((r, c)))?;
            let complete = state.active_count() <= 1;
            if complete {
                state.finalize_map()?;
            }
            seq += 1;
            let child = SearchNode {
                cost: state.circuit.len(),
                seq,
                complete,
                state,
            };
            let at = queue.partition_point(|n| (n.cost, n.seq) <= (child.cost, child.seq));
            queue.insert(at, child);
        }
        queue.truncate(cfg.max_queue);
    }
    // Unreachable: expansion always yields at least one child and the queue
    // keeps at least one state, so the loop ends only via a complete pop.
    Err(Error::internal("pivot search emptied its queue"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parity::{verify_equivalence, QubitMap};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_circuit(rng: &mut StdRng, q: usize, d: usize) -> CnotCircuit {
        let mut c = CnotCircuit::empty(q);
        for _ in 0..d {
            let control = rng.random_range(0..q);
            let mut target = rng.random_range(0..q - 1);
            if target >= control {
                target += 1;
            }
            c.push(control, target).unwrap();
        }
        c
    }

    #[test]
    fn rt_single_iteration_matches_plain() {
        let mut rng = StdRng::seed_from_u64(7);
        let g = Topology::grid(3, 3);
        for _ in 0..10 {
            let c = random_circuit(&mut rng, 9, 15);
            let m = circuit_to_parity_matrix(&c);
            let plain = perm_row_col(&m, &g, PivotPolicy::permuted()).unwrap();
            let rt = reverse_traversal(&c, &g, RtConfig { iterations: 1 }, PivotPolicy::permuted())
                .unwrap();
            assert_eq!(plain.circuit, rt.circuit);
            assert_eq!(plain.map, rt.map);
        }
    }

    #[test]
    fn rt_empty_circuit() {
        let c = CnotCircuit::empty(5);
        let g = Topology::line(5);
        let result =
            reverse_traversal(&c, &g, RtConfig::default(), PivotPolicy::permuted()).unwrap();
        assert!(result.circuit.is_empty());
        assert!(result.map.is_identity());
    }

    #[test]
    fn rt_never_worse_and_verifies() {
        let mut rng = StdRng::seed_from_u64(11);
        let g = Topology::grid(3, 3);
        for _ in 0..25 {
            let c = random_circuit(&mut rng, 9, 20);
            let m = circuit_to_parity_matrix(&c);
            let plain = perm_row_col(&m, &g, PivotPolicy::permuted()).unwrap();
            let rt = reverse_traversal(&c, &g, RtConfig::default(), PivotPolicy::permuted())
                .unwrap();
            assert!(rt.gate_count() <= plain.gate_count());
            assert!(verify_equivalence(&m, &rt.circuit, &rt.map).unwrap());
            for gate in rt.circuit.gates() {
                assert!(g.has_edge(gate.control, gate.target));
            }
        }
    }

    #[test]
    fn rt_rejects_zero_iterations() {
        let c = CnotCircuit::empty(3);
        let g = Topology::line(3);
        assert!(matches!(
            reverse_traversal(&c, &g, RtConfig { iterations: 0 }, PivotPolicy::permuted()),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn astar_identity_is_empty() {
        let m = ParityMatrix::identity(5);
        let g = Topology::line(5);
        let result = astar_perm_row_col(&m, &g, AStarConfig::default()).unwrap();
        assert!(result.circuit.is_empty());
        assert_eq!(result.circuit.len(), 0);
        assert!(result.map.is_complete());
    }

    #[test]
    fn astar_width_one_matches_plain() {
        let mut rng = StdRng::seed_from_u64(23);
        let g = Topology::grid(2, 3);
        let cfg = AStarConfig {
            choice_width: 1,
            max_queue: 10,
        };
        for _ in 0..10 {
            let c = random_circuit(&mut rng, 6, 10);
            let m = circuit_to_parity_matrix(&c);
            let plain = perm_row_col(&m, &g, PivotPolicy::permuted()).unwrap();
            let astar = astar_perm_row_col(&m, &g, cfg).unwrap();
            assert_eq!(plain.circuit, astar.circuit);
            assert_eq!(plain.map, astar.map);
        }
    }

    #[test]
    fn astar_exhaustive_never_worse_on_line3() {
        let mut rng = StdRng::seed_from_u64(31);
        let g = Topology::line(3);
        for _ in 0..20 {
            let c = random_circuit(&mut rng, 3, 4);
            let m = circuit_to_parity_matrix(&c);
            let plain = perm_row_col(&m, &g, PivotPolicy::permuted()).unwrap();
            let astar = astar_perm_row_col(&m, &g, AStarConfig::exhaustive()).unwrap();
            assert!(astar.gate_count() <= plain.gate_count());
            assert!(verify_equivalence(&m, &astar.circuit, &astar.map).unwrap());
            for gate in astar.circuit.gates() {
                assert!(g.has_edge(gate.control, gate.target));
            }
        }
    }

    #[test]
    fn astar_default_config_verifies() {
        let mut rng = StdRng::seed_from_u64(43);
        let g = Topology::grid(2, 3);
        for _ in 0..10 {
            let c = random_circuit(&mut rng, 6, 12);
            let m = circuit_to_parity_matrix(&c);
            let result = astar_perm_row_col(&m, &g, AStarConfig::default()).unwrap();
            assert!(verify_equivalence(&m, &result.circuit, &result.map).unwrap());
        }
    }

    #[test]
    fn astar_rejects_zero_limits() {
        let m = ParityMatrix::identity(3);
        let g = Topology::line(3);
        for cfg in [
            AStarConfig {
                choice_width: 0,
                max_queue: 10,
            },
            AStarConfig {
                choice_width: 4,
                max_queue: 0,
            },
        ] {
            assert!(matches!(
                astar_perm_row_col(&m, &g, cfg),
                Err(Error::InvalidConfig(_))
            ));
        }
    }

    #[test]
    fn astar_map_composes_correctly() {
        // The search assigns map entries per forced pivot; the final map
        // must be a bijection matching the residual permutation.
        let c = CnotCircuit::from_gates(6, [(0, 1), (2, 4), (5, 3), (1, 5)]).unwrap();
        let m = circuit_to_parity_matrix(&c);
        let g = Topology::grid(2, 3);
        let result = astar_perm_row_col(&m, &g, AStarConfig::default()).unwrap();
        assert!(result.map.is_complete());
        assert_ne!(result.map, QubitMap::unassigned(6));
        assert!(verify_equivalence(&m, &result.circuit, &result.map).unwrap());
    }
}
