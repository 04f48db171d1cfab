//! Batch command line for architecture-aware CNOT circuit synthesis.
//!
//! Subcommands: `route` (re-synthesize a circuit for a topology), `verify`
//! (check a routed circuit against the original), `gen` (write seeded random
//! circuit files), `bench` (sweep algorithms across topologies, reporting
//! CSV), and `topologies` (list the built-in catalog).
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
//! 3 internal invariant breach.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parityroute::bench::{random_cnot_circuit, render_csv, run_bench, Algorithm, BenchSpec};
use parityroute::format::{
    parse_circuit, parse_map_comments, parse_topology, write_circuit, write_map_comments,
};
use parityroute::parity::{circuit_to_parity_matrix, verify_equivalence};
use parityroute::search::{AStarConfig, RtConfig};
use parityroute::topology::{builtin_names, builtin_topology, Topology};
use parityroute::Error;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "parityroute",
    version,
    about = "Architecture-aware CNOT circuit synthesis",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-synthesize a circuit so every gate lies on a topology edge.
    Route(RouteArgs),
    /// Check a routed circuit (and its map comments) against the original.
    Verify(VerifyArgs),
    /// Generate seeded random CNOT circuit files.
    Gen(GenArgs),
    /// Sweep algorithms across topologies and report aggregate CSV.
    Bench(BenchArgs),
    /// List the built-in topology catalog with its statistics.
    Topologies,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgoArg {
    Rowcol,
    Permrowcol,
    PermrowcolRt,
    PermrowcolAstar,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Rowcol => Algorithm::RowCol,
            AlgoArg::Permrowcol => Algorithm::PermRowCol,
            AlgoArg::PermrowcolRt => Algorithm::PermRowColRt,
            AlgoArg::PermrowcolAstar => Algorithm::PermRowColAstar,
        }
    }
}

/// Search settings shared by `route` and `bench`.
#[derive(Args)]
struct SearchFlags {
    /// Reverse-traversal passes (permrowcol-rt).
    #[arg(long, default_value_t = RtConfig::default().iterations)]
    rt_iters: usize,
    /// Pivot candidates expanded per step (permrowcol-astar).
    #[arg(long, default_value_t = AStarConfig::default().choice_width)]
    choice_width: usize,
    /// Frontier bound for the pivot search (permrowcol-astar).
    #[arg(long, default_value_t = AStarConfig::default().max_queue)]
    max_queue: usize,
}

impl SearchFlags {
    fn rt(&self) -> RtConfig {
        RtConfig {
            iterations: self.rt_iters,
        }
    }

    fn astar(&self) -> AStarConfig {
        AStarConfig {
            choice_width: self.choice_width,
            max_queue: self.max_queue,
        }
    }
}

#[derive(Args)]
struct RouteArgs {
    /// Input circuit file.
    circuit: PathBuf,
    /// Write the routed circuit here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Catalog name or topology file.
    #[arg(long)]
    topology: String,
    /// Synthesis algorithm.
    #[arg(long, value_enum, default_value_t = AlgoArg::Permrowcol)]
    algo: AlgoArg,
    #[command(flatten)]
    search: SearchFlags,
    /// Print the per-step pivot log to stderr.
    #[arg(long)]
    explain: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Original circuit file.
    original: PathBuf,
    /// Routed circuit file; `# map` comments default to the identity map.
    routed: PathBuf,
    /// Also check every gate against this topology (catalog name or file).
    #[arg(long)]
    topology: Option<String>,
}

#[derive(Args)]
struct GenArgs {
    /// Wires per circuit.
    #[arg(short, long)]
    qubits: usize,
    /// Gates per circuit.
    #[arg(short = 'd', long)]
    gates: usize,
    /// Number of circuit files.
    #[arg(short = 'n', long, default_value_t = 1)]
    count: usize,
    /// Directory the files are written to.
    #[arg(short, long, default_value = ".")]
    out_dir: PathBuf,
    /// Generator seed; the same seed reproduces the same files.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Catalog topology to sweep (repeat for several).
    #[arg(long = "topology", required = true)]
    topologies: Vec<String>,
    /// Input gate count rung (repeat for a ladder).
    #[arg(short = 'd', long = "gates", required = true)]
    gate_counts: Vec<usize>,
    /// Circuits per (topology, gate count) pair.
    #[arg(long, default_value_t = 100)]
    circuits: usize,
    /// Algorithm to run (repeat for several; default rowcol, permrowcol,
    /// permrowcol-rt).
    #[arg(long = "algo", value_enum)]
    algos: Vec<AlgoArg>,
    /// Base seed for the whole sweep.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[command(flatten)]
    search: SearchFlags,
}

/// A failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Verification(_)
            | Error::Internal(_)
            | Error::SingularMatrix
            | Error::InvalidTree { .. }
            | Error::CuttingVertex { .. }
            | Error::InactiveVertex { .. } => 3,
            Error::Parse { .. }
            | Error::UnknownTopology { .. }
            | Error::DimensionMismatch { .. }
            | Error::InvalidConfig(_)
            | Error::IndexOutOfRange { .. }
            | Error::EqualIndices { .. }
            | Error::IncompleteMap
            | Error::Disconnected => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Writes to stdout, ignoring a closed pipe (e.g. `parityroute ... | head`).
fn print_stdout(s: &str) {
    use std::io::Write as _;
    let _ = std::io::stdout().write_all(s.as_bytes());
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage_failure(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage_failure(format!("{}: {e}", path.display())))
}

/// Resolves `--topology`: a catalog name first, otherwise a topology file.
fn load_topology(source: &str) -> Result<Topology, Failure> {
    if builtin_names().contains(&source) {
        return Ok(builtin_topology(source)?);
    }
    let path = Path::new(source);
    if path.exists() {
        return Ok(parse_topology(&read_file(path)?)?);
    }
    Err(builtin_topology(source).expect_err("name is not in the catalog").into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Route(args) => route(args),
        Command::Verify(args) => verify(args),
        Command::Gen(args) => gen(args),
        Command::Bench(args) => bench(args),
        Command::Topologies => topologies(),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn route(args: &RouteArgs) -> Result<(), Failure> {
    let circuit = parse_circuit(&read_file(&args.circuit)?)?;
    let topology = load_topology(&args.topology)?;
    if circuit.n_qubits() != topology.n() {
        return Err(Error::DimensionMismatch {
            left: circuit.n_qubits(),
            right: topology.n(),
        }
        .into());
    }

    let algorithm = Algorithm::from(args.algo);
    let result = algorithm.synthesize(&circuit, &topology, args.search.rt(), args.search.astar())?;

    // A route only succeeds if its own output verifies.
    let m = circuit_to_parity_matrix(&circuit);
    if !verify_equivalence(&m, &result.circuit, &result.map)? {
        return Err(Error::Internal("routed circuit failed verification".into()).into());
    }
    if let Some(g) = result
        .circuit
        .gates()
        .iter()
        .find(|g| !topology.has_edge(g.control, g.target))
    {
        return Err(Error::Internal(format!("routed gate {g} is not a topology edge")).into());
    }

    if args.explain {
        for (i, step) in result.steps.iter().enumerate() {
            let gates: Vec<String> = step.gates.iter().map(ToString::to_string).collect();
            eprintln!(
                "step {}: pivot row {}, column {}, gates [{}]",
                i + 1,
                step.pivot_row,
                step.pivot_col,
                gates.join(", ")
            );
        }
    }

    let mut rendered = write_circuit(&result.circuit);
    rendered.push_str(&write_map_comments(&result.map)?);
    match &args.output {
        Some(path) => write_file(path, &rendered)?,
        None => print_stdout(&rendered),
    }
    eprintln!("input gates: {}", circuit.len());
    eprintln!("output gates: {}", result.gate_count());
    Ok(())
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let original = parse_circuit(&read_file(&args.original)?)?;
    let routed_text = read_file(&args.routed)?;
    let routed = parse_circuit(&routed_text)?;
    if original.n_qubits() != routed.n_qubits() {
        return Err(Error::DimensionMismatch {
            left: original.n_qubits(),
            right: routed.n_qubits(),
        }
        .into());
    }
    let map = parse_map_comments(&routed_text, routed.n_qubits())?;

    let m = circuit_to_parity_matrix(&original);
    if !verify_equivalence(&m, &routed, &map)? {
        return Err(Failure {
            code: 1,
            message: "routed circuit is not equivalent to the original under its map".into(),
        });
    }
    if let Some(source) = &args.topology {
        let topology = load_topology(source)?;
        if let Some(g) = routed
            .gates()
            .iter()
            .find(|g| !topology.has_edge(g.control, g.target))
        {
            return Err(Failure {
                code: 1,
                message: format!("gate {g} is not an edge of {source}"),
            });
        }
    }
    print_stdout("ok: circuits are equivalent under the routed map\n");
    Ok(())
}

fn gen(args: &GenArgs) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for i in 0..args.count {
        let c = random_cnot_circuit(args.qubits, args.gates, &mut rng)?;
        let path = args
            .out_dir
            .join(format!("circuit_{}q_{}g_{}.cnot", args.qubits, args.gates, i));
        write_file(&path, &write_circuit(&c))?;
        print_stdout(&format!("{}\n", path.display()));
    }
    Ok(())
}

fn bench(args: &BenchArgs) -> Result<(), Failure> {
    let mut spec = BenchSpec {
        topologies: args.topologies.clone(),
        gate_counts: args.gate_counts.clone(),
        circuits_per_case: args.circuits,
        seed: args.seed,
        rt: args.search.rt(),
        astar: args.search.astar(),
        ..BenchSpec::default()
    };
    if !args.algos.is_empty() {
        spec.algorithms = args.algos.iter().copied().map(Algorithm::from).collect();
    }
    let records = run_bench(&spec)?;
    let csv = render_csv(&records);
    match &args.csv {
        Some(path) => {
            write_file(path, &csv)?;
            eprintln!("wrote {} records to {}", records.len(), path.display());
        }
        None => print_stdout(&csv),
    }
    Ok(())
}

fn topologies() -> Result<(), Failure> {
    let mut table = format!(
        "{:<14} {:>6} {:>6} {:>15} {:>15}\n",
        "name", "qubits", "edges", "mean distance", "average degree"
    );
    for name in builtin_names() {
        let g = builtin_topology(name)?;
        table.push_str(&format!(
            "{name:<14} {:>6} {:>6} {:>15.4} {:>15.4}\n",
            g.n(),
            g.edge_count(),
            g.mean_distance()?,
            g.average_degree()
        ));
    }
    print_stdout(&table);
    Ok(())
}
