//! Shared fixtures for the integration suites: the six-qubit worked example
//! (input circuit, parity matrix, reference output, per-step trace) and a
//! seeded random-instance pool reused by several acceptance checks.
#![allow(dead_code)]

use parityroute::bench::random_cnot_circuit;
use parityroute::parity::{CnotCircuit, ParityMatrix, QubitMap};
use parityroute::topology::{builtin_names, builtin_topology, Topology};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The six-qubit example circuit routed throughout the golden walkthrough.
pub fn golden_circuit() -> CnotCircuit {
    CnotCircuit::from_gates(
        6,
        [
            (0, 1),
            (1, 5),
            (3, 1),
            (1, 4),
            (1, 3),
            (3, 5),
            (2, 5),
            (5, 4),
            (4, 0),
            (0, 2),
        ],
    )
    .expect("fixture circuit is well-formed")
}

/// The parity matrix of [`golden_circuit`].
pub fn golden_matrix() -> ParityMatrix {
    ParityMatrix::from_rows(&[
        [0, 1, 0, 1, 1, 0],
        [1, 1, 1, 1, 1, 0],
        [1, 0, 0, 0, 1, 1],
        [1, 1, 1, 0, 1, 0],
        [1, 0, 1, 0, 1, 0],
        [1, 0, 1, 0, 1, 1],
    ])
    .expect("fixture matrix is well-formed")
}

/// The 13-gate reference synthesis of [`golden_matrix`] over `grid2x3`.
pub fn golden_output_gates() -> Vec<(usize, usize)> {
    vec![
        (1, 0),
        (0, 1),
        (0, 3),
        (3, 4),
        (5, 4),
        (4, 1),
        (2, 5),
        (1, 2),
        (1, 4),
        (5, 2),
        (2, 5),
        (5, 4),
        (5, 2),
    ]
}

/// The reference output map: register `r` holds logical `GOLDEN_MAP[r]`.
pub const GOLDEN_MAP: [usize; 6] = [3, 2, 5, 1, 4, 0];

pub fn golden_map() -> QubitMap {
    QubitMap::from_assignment(GOLDEN_MAP.to_vec()).expect("fixture map is a bijection")
}

/// Pivot rows chosen in walkthrough order.
pub const GOLDEN_PIVOT_ROWS: [usize; 5] = [0, 1, 3, 4, 2];
/// Pivot columns chosen in walkthrough order.
pub const GOLDEN_PIVOT_COLS: [usize; 5] = [3, 2, 1, 4, 5];

/// Matrix checkpoints along the walkthrough, in row-major 0/1 form.
pub mod states {
    /// After step 1's column elimination only.
    pub const AFTER_STEP1_COL: [[u8; 6]; 6] = [
        [0, 1, 0, 1, 1, 0],
        [1, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 1, 1],
        [1, 1, 1, 0, 1, 0],
        [1, 0, 1, 0, 1, 0],
        [1, 0, 1, 0, 1, 1],
    ];
    /// After step 1 completes (column + row elimination).
    pub const AFTER_STEP1: [[u8; 6]; 6] = [
        [0, 0, 0, 1, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 1, 1],
        [1, 1, 1, 0, 1, 0],
        [1, 0, 1, 0, 1, 0],
        [1, 0, 1, 0, 1, 1],
    ];
    /// After step 2's column elimination only.
    pub const AFTER_STEP2_COL: [[u8; 6]; 6] = [
        [0, 0, 0, 1, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ];
    /// After step 2 completes.
    pub const AFTER_STEP2: [[u8; 6]; 6] = [
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ];
    /// After step 4 (step 3 emits no gates; rows 0, 1, 3 are inactive and
    /// frozen at their step-2 values).
    pub const AFTER_STEP4: [[u8; 6]; 6] = [
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, 1],
    ];
    /// After step 5: the permutation matrix of the output map.
    pub const AFTER_STEP5: [[u8; 6]; 6] = [
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, 0],
    ];
}

pub fn matrix_from(rows: &[[u8; 6]; 6]) -> ParityMatrix {
    ParityMatrix::from_rows(rows).expect("fixture state is well-formed")
}

/// One randomized benchmark instance: a catalog topology and a circuit on it.
pub struct Instance {
    pub topology_name: &'static str,
    pub topology: Topology,
    pub circuit: CnotCircuit,
}

/// The shared seeded instance pool for the randomized acceptance checks:
/// `count` draws of (uniform catalog topology, uniform circuit with gate
/// count in `1..=2·|E|`).
pub fn seeded_instances(seed: u64, count: usize) -> Vec<Instance> {
    let names = builtin_names();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let topology_name = names[rng.random_range(0..names.len())];
            let topology = builtin_topology(topology_name).expect("catalog name resolves");
            let d = rng.random_range(1..=2 * topology.edge_count());
            let circuit = random_cnot_circuit(topology.n(), d, &mut rng)
                .expect("catalog topologies have at least 2 qubits");
            Instance {
                topology_name,
                topology,
                circuit,
            }
        })
        .collect()
}
