//! Architecture-aware synthesis: column/row elimination over Steiner trees
//! and the PermRowCol / RowCol synthesizers.
//!
//! # Overview
//!
//! Given an invertible parity matrix and a connectivity graph, synthesis
//! rebuilds an equivalent CNOT circuit whose every gate lies on a graph edge.
//! Each round picks a pivot row `r` (a non-cutting vertex, so the remaining
//! graph stays connected) and a pivot column `c`, reduces column `c` to a
//! basis vector with row operations routed along a Steiner tree, reduces row
//! `r` the same way, records the pair in the output qubit map, and removes
//! vertex `r` from the graph. After `n − 1` rounds plus a final bookkeeping
//! assignment the matrix is a permutation matrix — the qubit map — and the
//! recorded row operations, read as CNOTs, form the output circuit.
//!
//! Two pivot modes exist. *Permuted* mode (PermRowCol) lets the column choice
//! float free, so the result is correct up to an output permutation that the
//! map captures. *Fixed-diagonal* mode (RowCol) forces `c = r`, producing an
//! identity map at the cost of extra gates.
//!
//! # Example
//!
//! ```
//! use parityroute::parity::{circuit_to_parity_matrix, verify_equivalence, CnotCircuit};
//! use parityroute::synthesis::{perm_row_col, PivotPolicy};
//! use parityroute::topology::Topology;
//!
//! let circuit = CnotCircuit::from_gates(6, [(0, 5), (3, 1), (2, 4)]).unwrap();
//! let matrix = circuit_to_parity_matrix(&circuit);
//! let grid = Topology::grid(2, 3);
//! let result = perm_row_col(&matrix, &grid, PivotPolicy::permuted()).unwrap();
//! assert!(verify_equivalence(&matrix, &result.circuit, &result.map).unwrap());
//! ```

use crate::error::{Error, Result};
use crate::parity::{
    circuit_to_parity_matrix, solve_row_dependencies, CnotCircuit, Gate, ParityMatrix, QubitMap,
};
use crate::topology::{SteinerTree, Topology};

/// Row-selection heuristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RowRule {
    /// Pick the candidate row with the fewest ones; ties to the lowest index.
    #[default]
    MinWeight,
}

/// Column-selection heuristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColRule {
    /// Among unassigned columns with a one in the pivot row, pick the one
    /// with the fewest ones; ties to the lowest index.
    #[default]
    MinWeight,
}

/// Whether the pivot column may differ from the pivot row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotMode {
    /// Free column choice; the output map is an arbitrary permutation.
    #[default]
    Permuted,
    /// Force `column = row`; the output map is the identity (RowCol).
    FixedDiagonal,
}

/// Pivot-selection policy for a synthesis run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PivotPolicy {
    pub row_rule: RowRule,
    pub col_rule: ColRule,
    pub mode: PivotMode,
}

impl PivotPolicy {
    /// The default PermRowCol policy: free column choice.
    pub fn permuted() -> Self {
        PivotPolicy {
            mode: PivotMode::Permuted,
            ..PivotPolicy::default()
        }
    }

    /// The RowCol baseline policy: pivot column forced equal to pivot row.
    pub fn fixed_diagonal() -> Self {
        PivotPolicy {
            mode: PivotMode::FixedDiagonal,
            ..PivotPolicy::default()
        }
    }
}

/// One synthesis round: the pivot pair and the gates it emitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisStep {
    pub pivot_row: usize,
    pub pivot_col: usize,
    pub gates: Vec<Gate>,
}

/// The output of a synthesis run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisResult {
    /// Gates in emission order; every gate lies on a topology edge.
    pub circuit: CnotCircuit,
    /// Complete register → logical bijection the circuit is read through.
    pub map: QubitMap,
    /// Per-round pivot log, in round order.
    pub steps: Vec<SynthesisStep>,
}

impl SynthesisResult {
    /// Number of gates in the synthesized circuit.
    pub fn gate_count(&self) -> usize {
        self.circuit.len()
    }
}

/// Picks the pivot row: the candidate with the fewest ones, ties to the
/// lowest index.
pub fn choose_row(m: &ParityMatrix, candidates: &[usize]) -> Result<usize> {
    ranked_rows(m, candidates)?
        .first()
        .copied()
        .ok_or_else(|| Error::internal("choose_row: no candidate rows"))
}

/// Picks the pivot column: among `candidates` (the unassigned columns),
/// those with a one in `pivot_row`, fewest ones first, ties to the lowest
/// index.
pub fn choose_column(m: &ParityMatrix, pivot_row: usize, candidates: &[usize]) -> Result<usize> {
    ranked_columns(m, pivot_row, candidates)?
        .first()
        .copied()
        .ok_or_else(|| {
            Error::internal(format!(
                "choose_column: no eligible column in pivot row {pivot_row} \
                 (matrix not invertible?)"
            ))
        })
}

/// All candidate rows ordered by the row heuristic (weight, then index).
pub(crate) fn ranked_rows(m: &ParityMatrix, candidates: &[usize]) -> Result<Vec<usize>> {
    for &r in candidates {
        if r >= m.n() {
            return Err(Error::IndexOutOfRange { index: r, n: m.n() });
        }
    }
    let mut ranked: Vec<usize> = candidates.to_vec();
    ranked.sort_by_key(|&r| (m.row_weight(r), r));
    Ok(ranked)
}

/// Eligible columns ordered by the column heuristic (weight, then index).
pub(crate) fn ranked_columns(
    m: &ParityMatrix,
    pivot_row: usize,
    candidates: &[usize],
) -> Result<Vec<usize>> {
    if pivot_row >= m.n() {
        return Err(Error::IndexOutOfRange {
            index: pivot_row,
            n: m.n(),
        });
    }
    let mut ranked: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&c| m.get(pivot_row, c))
        .collect();
    ranked.sort_by_key(|&c| (m.col_weight(c), c));
    Ok(ranked)
}

/// Reduces `pivot_col` to the basis vector aimed at the tree root.
///
/// Two passes over the tree edges `(parent, child)` in postorder:
///
/// 1. *Fill:* if the parent's entry in `pivot_col` is zero, emit
///    `CNOT(parent, child)` (row\[parent\] ⊕= row\[child\]), pulling a one up
///    from the child. Afterwards every tree vertex has a one in the column.
/// 2. *Clear:* emit `CNOT(child, parent)` (row\[child\] ⊕= row\[parent\]) for
///    every edge, cancelling all entries except the root's.
///
/// The tree root acts as the pivot row; the tree's terminals must be exactly
/// the rows with a one in `pivot_col` (the root itself may carry a zero, as
/// happens in fixed-diagonal mode). Returns the emitted gates; the matrix is
/// updated in lockstep.
///
/// # Errors
///
/// [`Error::InvalidTree`] if a tree edge is not an active edge of `g` or the
/// terminal set does not match the column support.
pub fn eliminate_column(
    m: &mut ParityMatrix,
    g: &Topology,
    tree: &SteinerTree,
    pivot_col: usize,
) -> Result<Vec<Gate>> {
    if pivot_col >= m.n() {
        return Err(Error::IndexOutOfRange {
            index: pivot_col,
            n: m.n(),
        });
    }
    validate_tree_edges(g, tree)?;
    let support: Vec<usize> = (0..m.n()).filter(|&i| m.get(i, pivot_col)).collect();
    if tree.terminals() != support {
        return Err(Error::tree(format!(
            "terminals {:?} do not match column {pivot_col} support {support:?}",
            tree.terminals()
        )));
    }
    let mut gates = Vec::new();
    let edges = tree.postorder_edges();
    for &(parent, child) in &edges {
        if !m.get(parent, pivot_col) {
            gates.push(Gate::new(parent, child, m.n())?);
            m.xor_rows(child, parent);
        }
    }
    for &(parent, child) in &edges {
        gates.push(Gate::new(child, parent, m.n())?);
        m.xor_rows(parent, child);
    }
    debug_assert!(
        m.get(tree.root(), pivot_col) && m.col_weight(pivot_col) == 1,
        "column {pivot_col} must reduce to a basis vector at the root"
    );
    Ok(gates)
}

/// Reduces `pivot_row` to a basis vector.
///
/// The tree must be rooted at `pivot_row` and span the rows whose sum equals
/// the pivot row (plus the pivot row itself). Two passes:
///
/// 1. *Preorder:* for each edge `(parent, child)` whose child is a Steiner
///    node, emit `CNOT(parent, child)` — pre-adding the Steiner row into its
///    parent so its contribution cancels later.
/// 2. *Postorder:* emit `CNOT(parent, child)` for every edge, accumulating
///    each subtree into its root; the pivot row ends as the sum of itself and
///    its dependency rows, a basis vector.
///
/// Returns the emitted gates; the matrix is updated in lockstep.
///
/// # Errors
///
/// [`Error::InvalidTree`] if the root differs from `pivot_row` or a tree
/// edge is not an active edge of `g`.
pub fn eliminate_row(
    m: &mut ParityMatrix,
    g: &Topology,
    tree: &SteinerTree,
    pivot_row: usize,
) -> Result<Vec<Gate>> {
    if pivot_row >= m.n() {
        return Err(Error::IndexOutOfRange {
            index: pivot_row,
            n: m.n(),
        });
    }
    if tree.root() != pivot_row {
        return Err(Error::tree(format!(
            "row elimination tree is rooted at {} instead of pivot row {pivot_row}",
            tree.root()
        )));
    }
    validate_tree_edges(g, tree)?;
    let mut gates = Vec::new();
    for (parent, child) in tree.preorder_edges() {
        if tree.is_steiner(child) {
            gates.push(Gate::new(parent, child, m.n())?);
            m.xor_rows(child, parent);
        }
    }
    for (parent, child) in tree.postorder_edges() {
        gates.push(Gate::new(parent, child, m.n())?);
        m.xor_rows(child, parent);
    }
    debug_assert!(
        m.row_is_basis(pivot_row),
        "row {pivot_row} must reduce to a basis vector"
    );
    Ok(gates)
}

fn validate_tree_edges(g: &Topology, tree: &SteinerTree) -> Result<()> {
    for (parent, child) in tree.preorder_edges() {
        if !g.is_active(parent) || !g.is_active(child) || !g.has_edge(parent, child) {
            return Err(Error::tree(format!(
                "tree edge ({parent}, {child}) is not an active topology edge"
            )));
        }
    }
    Ok(())
}

/// In-progress synthesis state shared by the plain synthesizer and the
/// pivot search.
#[derive(Debug, Clone)]
pub(crate) struct WorkState {
    pub matrix: ParityMatrix,
    pub graph: Topology,
    pub map: QubitMap,
    pub circuit: CnotCircuit,
    pub steps: Vec<SynthesisStep>,
}

impl WorkState {
    /// Validates the inputs and clones working copies.
    pub fn new(m: &ParityMatrix, g: &Topology) -> Result<Self> {
        if m.n() != g.n() {
            return Err(Error::DimensionMismatch {
                left: m.n(),
                right: g.n(),
            });
        }
        if let Some(v) = (0..g.n()).find(|&v| !g.is_active(v)) {
            return Err(Error::InactiveVertex { vertex: v });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        if !m.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(WorkState {
            matrix: m.clone(),
            graph: g.clone(),
            map: QubitMap::unassigned(m.n()),
            circuit: CnotCircuit::empty(m.n()),
            steps: Vec::new(),
        })
    }

    pub fn active_count(&self) -> usize {
        self.graph.active_count()
    }

    /// Runs one synthesis round. With `forced = Some((r, c))` the pivot pair
    /// is taken as given (the pivot search supplies ranked pairs); otherwise
    /// the policy's heuristics choose it.
    pub fn step(&mut self, policy: PivotPolicy, forced: Option<(usize, usize)>) -> Result<()> {
        let (r, c) = match forced {
            Some(pair) => pair,
            None => {
                let candidates = self.graph.non_cutting_vertices()?;
                let RowRule::MinWeight = policy.row_rule;
                let r = choose_row(&self.matrix, &candidates)?;
                let c = match policy.mode {
                    PivotMode::FixedDiagonal => r,
                    PivotMode::Permuted => {
                        let ColRule::MinWeight = policy.col_rule;
                        choose_column(&self.matrix, r, &self.map.unassigned_logicals())?
                    }
                };
                (r, c)
            }
        };

        let mut gates = Vec::new();
        let support: Vec<usize> = (0..self.matrix.n())
            .filter(|&i| self.matrix.get(i, c))
            .collect();
        let col_tree = self.graph.steiner_tree(r, &support)?;
        let col_gates = eliminate_column(&mut self.matrix, &self.graph, &col_tree, c)?;
        for &gate in &col_gates {
            self.circuit.push_gate(gate);
        }
        gates.extend(col_gates);

        // Column elimination may leave the pivot row a basis vector already;
        // only reduce it when needed.
        if !self.matrix.row_is_basis(r) {
            let mut terminals = solve_row_dependencies(&self.matrix, r, c)?;
            terminals.push(r);
            let row_tree = self.graph.steiner_tree(r, &terminals)?;
            let row_gates = eliminate_row(&mut self.matrix, &self.graph, &row_tree, r)?;
            for &gate in &row_gates {
                self.circuit.push_gate(gate);
            }
            gates.extend(row_gates);
        }

        self.map.assign(r, c)?;
        self.graph.remove_vertex(r)?;
        self.steps.push(SynthesisStep {
            pivot_row: r,
            pivot_col: c,
            gates,
        });
        Ok(())
    }

    /// Assigns the final surviving vertex to the last unassigned column.
    pub fn finalize_map(&mut self) -> Result<()> {
        let rest = self.map.unassigned_registers();
        match rest.as_slice() {
            [] => Ok(()),
            &[register] => {
                let logical = self.map.unassigned_logicals()[0];
                self.map.assign(register, logical)
            }
            _ => Err(Error::internal(format!(
                "{} registers left unassigned after synthesis",
                rest.len()
            ))),
        }
    }

    pub fn into_result(self) -> SynthesisResult {
        SynthesisResult {
            circuit: self.circuit,
            map: self.map,
            steps: self.steps,
        }
    }
}

/// Synthesizes a circuit for `m` over the connectivity graph `g`.
///
/// Loops pivot selection and column/row elimination until a single vertex
/// remains, then assigns it to the last free column. The returned circuit
/// `C` and map `P` satisfy `circuit_to_parity_matrix(C) · P = m` (see
/// [`crate::parity::verify_equivalence`]), and every gate lies on an edge
/// of `g`. In fixed-diagonal mode the map is the identity.
///
/// # Errors
///
/// [`Error::SingularMatrix`] for non-invertible input,
/// [`Error::Disconnected`] / [`Error::InactiveVertex`] for unusable graphs,
/// [`Error::DimensionMismatch`] when sizes disagree.
pub fn perm_row_col(m: &ParityMatrix, g: &Topology, policy: PivotPolicy) -> Result<SynthesisResult> {
    let mut state = WorkState::new(m, g)?;
    while state.active_count() > 1 {
        state.step(policy, None)?;
    }
    state.finalize_map()?;
    Ok(state.into_result())
}

/// Synthesizes `c` with its logical qubits pre-placed on registers.
///
/// `placement` gives the starting layout: logical qubit `i` sits on register
/// `placement.register_of(i)`. The circuit's parity matrix and the topology
/// are conjugated into register space, synthesized with [`perm_row_col`],
/// and the result is relabeled back, so the returned circuit and map verify
/// against the *original* circuit on the *original* topology. Used by
/// reverse traversal, which feeds each round's output map back in as the
/// next placement.
///
/// # Errors
///
/// [`Error::IncompleteMap`] for a partial placement, otherwise as
/// [`perm_row_col`].
pub fn synthesize_with_placement(
    c: &CnotCircuit,
    g: &Topology,
    placement: &QubitMap,
    policy: PivotPolicy,
) -> Result<SynthesisResult> {
    if !placement.is_complete() {
        return Err(Error::IncompleteMap);
    }
    let n = c.n_qubits();
    if placement.n() != n {
        return Err(Error::DimensionMismatch {
            left: placement.n(),
            right: n,
        });
    }
    if g.n() != n {
        return Err(Error::DimensionMismatch {
            left: g.n(),
            right: n,
        });
    }
    // to_register[i] = register holding logical i; to_logical is its inverse.
    let to_register: Vec<usize> = (0..n)
        .map(|i| placement.register_of(i).expect("placement is complete"))
        .collect();
    let to_logical: Vec<usize> = (0..n)
        .map(|r| placement.logical_at(r).expect("placement is complete"))
        .collect();

    let m = circuit_to_parity_matrix(c);
    let mut placed = ParityMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) {
                placed.set(to_register[i], to_register[j], true);
            }
        }
    }
    let placed_graph = Topology::new(
        n,
        g.edges()
            .into_iter()
            .map(|(u, v)| (to_register[u], to_register[v])),
    )?;

    let placed_result = perm_row_col(&placed, &placed_graph, policy)?;

    // Relabel everything back into the original index space.
    let mut circuit = CnotCircuit::empty(n);
    for gate in placed_result.circuit.gates() {
        circuit.push(to_logical[gate.control], to_logical[gate.target])?;
    }
    let mut map = QubitMap::unassigned(n);
    for (r, &register) in to_register.iter().enumerate() {
        let placed_logical = placed_result
            .map
            .logical_at(register)
            .expect("synthesis map is complete");
        map.assign(r, to_logical[placed_logical])?;
    }
    let steps = placed_result
        .steps
        .into_iter()
        .map(|s| SynthesisStep {
            pivot_row: to_logical[s.pivot_row],
            pivot_col: to_logical[s.pivot_col],
            gates: s
                .gates
                .into_iter()
                .map(|g| Gate {
                    control: to_logical[g.control],
                    target: to_logical[g.target],
                })
                .collect(),
        })
        .collect();

    Ok(SynthesisResult { circuit, map, steps })
}
