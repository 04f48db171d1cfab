//! Architecture-aware CNOT circuit synthesis over GF(2) parity matrices.
//!
//! # Overview
//!
//! A CNOT circuit on `n` wires computes an invertible linear map over GF(2),
//! captured here as a [`parity::ParityMatrix`]. Given such a matrix and a
//! hardware coupling graph ([`topology::Topology`]), this crate re-synthesizes
//! an equivalent circuit that uses only gates between coupled qubits:
//!
//! * [`synthesis::perm_row_col`] — Steiner-tree row/column elimination. In
//!   its default permuted mode the algorithm chooses where each logical
//!   qubit ends up, trading a fixed output order for fewer gates; in
//!   fixed-diagonal mode it reproduces the classic identity-map behaviour.
//! * [`search::reverse_traversal`] — re-synthesizes the circuit alternately
//!   backwards and forwards, feeding each pass's output placement into the
//!   next and keeping the best forward result.
//! * [`search::astar_perm_row_col`] — a best-first search over pivot
//!   choices, widening the per-step heuristic into a bounded frontier.
//! * [`bench`](mod@bench) — seeded random-circuit sweeps with per-instance
//!   verification, aggregated to CSV.
//! * [`format`](mod@format) — plain-text readers and writers for circuits,
//!   topologies, and qubit maps.
//!
//! Every synthesis result carries the output [`parity::QubitMap`] and a
//! per-step gate log, and can be checked end to end with
//! [`parity::verify_equivalence`].
//!
//! # Example
//!
//! ```
//! use parityroute::parity::{circuit_to_parity_matrix, verify_equivalence, CnotCircuit};
//! use parityroute::synthesis::{perm_row_col, PivotPolicy};
//! use parityroute::topology::Topology;
//!
//! // A circuit that ignores connectivity...
//! let original = CnotCircuit::from_gates(4, [(0, 3), (3, 1), (1, 2)]).unwrap();
//! let m = circuit_to_parity_matrix(&original);
//!
//! // ...rewritten for a 2x2 grid, where wires 0 and 3 are not coupled.
//! let grid = Topology::grid(2, 2);
//! let result = perm_row_col(&m, &grid, PivotPolicy::permuted()).unwrap();
//!
//! for gate in result.circuit.gates() {
//!     assert!(grid.has_edge(gate.control, gate.target));
//! }
//! assert!(verify_equivalence(&m, &result.circuit, &result.map).unwrap());
//! ```

pub mod bench;
pub mod error;
pub mod format;
pub mod parity;
pub mod search;
pub mod synthesis;
pub mod topology;

pub use error::{Error, Result};
