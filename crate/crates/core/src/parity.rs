//! GF(2) linear algebra for CNOT circuits: parity matrices, row operations,
//! qubit maps, and equivalence verification.
//!
//! # Overview
//!
//! A CNOT-only circuit on `n` qubits computes an invertible linear map over
//! GF(2). That map is captured by a square *parity matrix*: column `j` holds
//! the parity term the circuit outputs on wire `j`, and row `i` marks which
//! outputs input qubit `i` participates in. A gate `CNOT(c, t)` corresponds
//! to the row operation `R(t, c)` — adding row `t` into row `c`.
//!
//! Synthesis works in the opposite direction: it applies row operations to a
//! parity matrix until only a permutation matrix remains, recording one CNOT
//! per operation. If the emitted circuit has parity matrix `M` and the
//! residual permutation is `P`, then `M · P` equals the original matrix — the
//! identity that [`verify_equivalence`] checks.
//!
//! # Example
//!
//! ```
//! use parityroute::parity::{circuit_to_parity_matrix, CnotCircuit, Gate};
//!
//! let c = CnotCircuit::from_gates(3, [(0, 1), (1, 2)]).unwrap();
//! let m = circuit_to_parity_matrix(&c);
//! // Wire 0 outputs the parity of inputs 0, 1 and 2.
//! assert_eq!(m.row_bits(0), vec![1, 1, 1]);
//! ```

use std::fmt;

use crate::error::{Error, Result};

/// One CNOT gate: `control` flips `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gate {
    pub control: usize,
    pub target: usize,
}

impl Gate {
    /// Creates a gate, checking `control != target` and both in `[0, n)`.
    pub fn new(control: usize, target: usize, n: usize) -> Result<Self> {
        if control >= n {
            return Err(Error::IndexOutOfRange { index: control, n });
        }
        if target >= n {
            return Err(Error::IndexOutOfRange { index: target, n });
        }
        if control == target {
            return Err(Error::EqualIndices { index: control });
        }
        Ok(Gate { control, target })
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cnot {} {}", self.control, self.target)
    }
}

/// An ordered sequence of CNOT gates on `n_qubits` wires.
///
/// Invariant: every gate's control and target are distinct and in range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnotCircuit {
    n_qubits: usize,
    gates: Vec<Gate>,
}

impl CnotCircuit {
    /// An empty circuit on `n_qubits` wires.
    pub fn empty(n_qubits: usize) -> Self {
        CnotCircuit {
            n_qubits,
            gates: Vec::new(),
        }
    }

    /// Builds a circuit from `(control, target)` pairs, validating each.
    pub fn from_gates(
        n_qubits: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut c = CnotCircuit::empty(n_qubits);
        for (control, target) in pairs {
            c.push(control, target)?;
        }
        Ok(c)
    }

    /// Appends a gate, validating indices.
    pub fn push(&mut self, control: usize, target: usize) -> Result<()> {
        self.gates.push(Gate::new(control, target, self.n_qubits)?);
        Ok(())
    }

    /// Appends an already-validated gate of the same width.
    pub(crate) fn push_gate(&mut self, gate: Gate) {
        debug_assert!(gate.control < self.n_qubits && gate.target < self.n_qubits);
        self.gates.push(gate);
    }

    /// Number of wires.
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// The gates in circuit order.
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Number of gates.
    pub fn len(&self) -> usize {
        self.gates.len()
    }

    /// True if the circuit has no gates.
    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// The same gates in reverse order. Because each CNOT is self-inverse,
    /// the reversed circuit computes the inverse linear map.
    pub fn reversed(&self) -> Self {
        CnotCircuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().copied().collect(),
        }
    }
}

/// A square GF(2) matrix with word-packed rows.
///
/// Row XOR is the hot path of synthesis, so each row is a small slice of
/// `u64` words and a row operation is a word-wise XOR.
#[derive(Clone, PartialEq, Eq)]
pub struct ParityMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl ParityMatrix {
    /// The `n × n` zero matrix.
    pub fn zeros(n: usize) -> Self {
        let words_per_row = n.div_ceil(64).max(1);
        ParityMatrix {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = ParityMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from dense 0/1 rows. All rows must have length equal
    /// to the row count.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut m = ParityMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            for (j, &bit) in row.iter().enumerate() {
                m.set(i, j, bit != 0);
            }
        }
        Ok(m)
    }

    /// Matrix dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        i * self.words_per_row..(i + 1) * self.words_per_row
    }

    /// Entry at `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.n && col < self.n);
        self.bits[row * self.words_per_row + col / 64] >> (col % 64) & 1 == 1
    }

    /// Sets the entry at `(row, col)`.
    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        debug_assert!(row < self.n && col < self.n);
        let word = &mut self.bits[row * self.words_per_row + col / 64];
        if value {
            *word |= 1 << (col % 64);
        } else {
            *word &= !(1 << (col % 64));
        }
    }

    /// Adds row `src` into row `dst` over GF(2): `row[dst] ^= row[src]`.
    ///
    /// This is the row operation `R(src, dst)`; the CNOT gate `CNOT(c, t)`
    /// acts on a parity matrix as `apply_row_op(t, c)`. Applying the same
    /// operation twice restores the matrix.
    pub fn apply_row_op(&mut self, src: usize, dst: usize) -> Result<()> {
        if src >= self.n {
            return Err(Error::IndexOutOfRange {
                index: src,
                n: self.n,
            });
        }
        if dst >= self.n {
            return Err(Error::IndexOutOfRange {
                index: dst,
                n: self.n,
            });
        }
        if src == dst {
            return Err(Error::EqualIndices { index: src });
        }
        self.xor_rows(src, dst);
        Ok(())
    }

    /// Unchecked row XOR used by the synthesis inner loops.
    #[inline]
    pub(crate) fn xor_rows(&mut self, src: usize, dst: usize) {
        debug_assert!(src != dst && src < self.n && dst < self.n);
        let src_range = self.row_range(src);
        let dst_range = self.row_range(dst);
        // Disjoint ranges: split the underlying buffer once.
        let (a, b) = if src < dst {
            let (head, tail) = self.bits.split_at_mut(dst_range.start);
            (&head[src_range], &mut tail[..self.words_per_row])
        } else {
            let (head, tail) = self.bits.split_at_mut(src_range.start);
            (&tail[..self.words_per_row], &mut head[dst_range])
        };
        for (dst_word, src_word) in b.iter_mut().zip(a) {
            *dst_word ^= src_word;
        }
    }

    /// Applies the row operation of one gate: `row[control] ^= row[target]`.
    pub(crate) fn apply_gate(&mut self, gate: Gate) {
        self.xor_rows(gate.target, gate.control);
    }

    /// Number of ones in row `i`.
    pub fn row_weight(&self, i: usize) -> usize {
        self.bits[self.row_range(i)]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Number of ones in column `j`.
    pub fn col_weight(&self, j: usize) -> usize {
        (0..self.n).filter(|&i| self.get(i, j)).count()
    }

    /// Row `i` as a dense 0/1 vector.
    pub fn row_bits(&self, i: usize) -> Vec<u8> {
        (0..self.n).map(|j| self.get(i, j) as u8).collect()
    }

    /// Column `j` as a dense 0/1 vector.
    pub fn col_bits(&self, j: usize) -> Vec<u8> {
        (0..self.n).map(|i| self.get(i, j) as u8).collect()
    }

    /// True if row `i` is a basis vector (exactly one 1).
    pub fn row_is_basis(&self, i: usize) -> bool {
        self.row_weight(i) == 1
    }

    /// True if the matrix has full rank over GF(2).
    ///
    /// Every parity matrix built from a circuit is invertible; synthesis
    /// requires this of its input.
    pub fn is_invertible(&self) -> bool {
        let mut work = self.clone();
        for col in 0..work.n {
            let pivot = (col..work.n).find(|&i| work.get(i, col));
            let Some(pivot) = pivot else {
                return false;
            };
            if pivot != col {
                // Swap by XOR-ing rows three times (cheap at these sizes and
                // keeps the buffer layout flat).
                work.xor_rows(pivot, col);
                work.xor_rows(col, pivot);
                work.xor_rows(pivot, col);
            }
            for i in 0..work.n {
                if i != col && work.get(i, col) {
                    work.xor_rows(col, i);
                }
            }
        }
        true
    }

    /// True if the matrix is exactly the identity.
    pub fn is_identity(&self) -> bool {
        *self == ParityMatrix::identity(self.n)
    }
}

impl fmt::Debug for ParityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ParityMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Display for ParityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A (possibly partial) bijection from physical registers to logical qubits.
///
/// `assignment[register] = logical` records that after synthesis the parity
/// term of logical output `logical` resides on physical register `register`.
/// While synthesis is running some registers are still unassigned. A complete
/// map materializes as a permutation matrix `P` with `P[r][c] = 1` iff
/// `assignment[r] = c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QubitMap {
    assignment: Vec<Option<usize>>,
}

impl QubitMap {
    /// A map with every register unassigned.
    pub fn unassigned(n: usize) -> Self {
        QubitMap {
            assignment: vec![None; n],
        }
    }

    /// The identity map on `n` registers.
    pub fn identity(n: usize) -> Self {
        QubitMap {
            assignment: (0..n).map(Some).collect(),
        }
    }

    /// Builds a complete map from `assignment[register] = logical`,
    /// validating that it is a bijection.
    pub fn from_assignment(assignment: Vec<usize>) -> Result<Self> {
        let n = assignment.len();
        let mut seen = vec![false; n];
        for &logical in &assignment {
            if logical >= n {
                return Err(Error::IndexOutOfRange { index: logical, n });
            }
            if seen[logical] {
                return Err(Error::EqualIndices { index: logical });
            }
            seen[logical] = true;
        }
        Ok(QubitMap {
            assignment: assignment.into_iter().map(Some).collect(),
        })
    }

    /// Number of registers.
    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    /// Assigns logical qubit `logical` to register `register`.
    pub fn assign(&mut self, register: usize, logical: usize) -> Result<()> {
        let n = self.n();
        if register >= n {
            return Err(Error::IndexOutOfRange { index: register, n });
        }
        if logical >= n {
            return Err(Error::IndexOutOfRange { index: logical, n });
        }
        if self.assignment[register].is_some() {
            return Err(Error::internal(format!(
                "register {register} assigned twice"
            )));
        }
        if self.assignment.contains(&Some(logical)) {
            return Err(Error::internal(format!(
                "logical qubit {logical} assigned twice"
            )));
        }
        self.assignment[register] = Some(logical);
        Ok(())
    }

    /// The logical qubit held by `register`, if assigned.
    pub fn logical_at(&self, register: usize) -> Option<usize> {
        self.assignment.get(register).copied().flatten()
    }

    /// The register holding `logical`, if assigned.
    pub fn register_of(&self, logical: usize) -> Option<usize> {
        self.assignment
            .iter()
            .position(|&l| l == Some(logical))
    }

    /// True if every register is assigned.
    pub fn is_complete(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    /// True if this is the identity bijection.
    pub fn is_identity(&self) -> bool {
        self.assignment
            .iter()
            .enumerate()
            .all(|(r, &l)| l == Some(r))
    }

    /// Registers still unassigned, ascending.
    pub fn unassigned_registers(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&r| self.assignment[r].is_none())
            .collect()
    }

    /// Logical qubits not yet assigned to any register, ascending.
    pub fn unassigned_logicals(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&l| !self.assignment.contains(&Some(l)))
            .collect()
    }

    /// `(register, logical)` pairs of a complete map, by register.
    pub fn pairs(&self) -> Result<Vec<(usize, usize)>> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(r, &l)| l.map(|l| (r, l)).ok_or(Error::IncompleteMap))
            .collect()
    }

    /// The permutation matrix `P` with `P[r][c] = 1` iff `assignment[r] = c`.
    pub fn permutation_matrix(&self) -> Result<ParityMatrix> {
        let mut p = ParityMatrix::zeros(self.n());
        for (r, l) in self.pairs()? {
            p.set(r, l, true);
        }
        Ok(p)
    }
}

/// Computes the parity matrix of a circuit.
///
/// The matrix is the ordered product of the gates' elementary row-operation
/// matrices, `E(g1) · E(g2) · … · E(gk)` with `E(c, t) = I + e_c e_tᵀ`, which
/// this routine folds by applying the row operation of each gate to the
/// identity in reverse gate order. Column `j` of the result is the parity
/// term output on wire `j`.
pub fn circuit_to_parity_matrix(circuit: &CnotCircuit) -> ParityMatrix {
    let mut m = ParityMatrix::identity(circuit.n_qubits());
    for gate in circuit.gates().iter().rev() {
        m.apply_gate(*gate);
    }
    m
}

/// Finds the unique set of rows whose GF(2) sum matches the pivot row.
///
/// Returns the set `S` of row indices (never containing `pivot_row`) such
/// that the sum of rows `S`, restricted to every column except
/// `excluded_col`, equals row `pivot_row` under the same restriction. The
/// solution is found by plain GF(2) Gaussian elimination with partial
/// pivoting by first nonzero entry (ties to the lowest index).
///
/// For an invertible matrix whose `excluded_col` is a basis vector pointing
/// at `pivot_row` — the state right after column elimination — the restricted
/// system is square and invertible, so the solution exists and is unique. A
/// singular system yields [`Error::SingularMatrix`].
pub fn solve_row_dependencies(
    m: &ParityMatrix,
    pivot_row: usize,
    excluded_col: usize,
) -> Result<Vec<usize>> {
    let n = m.n();
    if pivot_row >= n {
        return Err(Error::IndexOutOfRange { index: pivot_row, n });
    }
    if excluded_col >= n {
        return Err(Error::IndexOutOfRange {
            index: excluded_col,
            n,
        });
    }
    // Unknowns: one per candidate row (every row but the pivot).
    // Equations: one per kept column. Build the transposed system augmented
    // with the pivot row's restriction as the right-hand side.
    let rows: Vec<usize> = (0..n).filter(|&i| i != pivot_row).collect();
    let cols: Vec<usize> = (0..n).filter(|&j| j != excluded_col).collect();
    let width = rows.len();
    // aug[e] = equation for column cols[e]: bits over unknowns, then RHS.
    let mut aug: Vec<Vec<u8>> = cols
        .iter()
        .map(|&j| {
            let mut eq: Vec<u8> = rows.iter().map(|&i| m.get(i, j) as u8).collect();
            eq.push(m.get(pivot_row, j) as u8);
            eq
        })
        .collect();

    // Forward elimination to row echelon form.
    let mut pivot_of_unknown = vec![None; width];
    let mut next_eq = 0;
    for unknown in 0..width {
        let Some(src) = (next_eq..aug.len()).find(|&e| aug[e][unknown] == 1) else {
            continue;
        };
        aug.swap(next_eq, src);
        for e in 0..aug.len() {
            if e != next_eq && aug[e][unknown] == 1 {
                let (pivot_eq, other) = if e < next_eq {
                    let (head, tail) = aug.split_at_mut(next_eq);
                    (&tail[0], &mut head[e])
                } else {
                    let (head, tail) = aug.split_at_mut(e);
                    (&head[next_eq], &mut tail[0])
                };
                for (o, p) in other.iter_mut().zip(pivot_eq) {
                    *o ^= p;
                }
            }
        }
        pivot_of_unknown[unknown] = Some(next_eq);
        next_eq += 1;
    }
    // Any leftover equation with zero coefficients but a set RHS means the
    // system is inconsistent; a free unknown means it is underdetermined.
    // Both indicate a singular restricted system.
    for eq in &aug[next_eq..] {
        if *eq.last().unwrap() == 1 {
            return Err(Error::SingularMatrix);
        }
    }
    if pivot_of_unknown.iter().any(Option::is_none) {
        return Err(Error::SingularMatrix);
    }

    let mut solution = Vec::new();
    for (unknown, pivot_eq) in pivot_of_unknown.iter().enumerate() {
        let eq = pivot_eq.expect("checked above");
        if *aug[eq].last().unwrap() == 1 {
            solution.push(rows[unknown]);
        }
    }
    Ok(solution)
}

/// Checks that `synthesized`, read through the qubit map `p`, computes the
/// same linear function as `original`.
///
/// With `M` the parity matrix of the synthesized circuit and `P` the
/// permutation matrix of `p`, this verifies `M · P = original` — i.e. for
/// every assigned pair `(register, logical)`, column `logical` of the
/// original equals column `register` of `M`.
pub fn verify_equivalence(
    original: &ParityMatrix,
    synthesized: &CnotCircuit,
    p: &QubitMap,
) -> Result<bool> {
    if !p.is_complete() {
        return Err(Error::IncompleteMap);
    }
    if original.n() != synthesized.n_qubits() {
        return Err(Error::DimensionMismatch {
            left: original.n(),
            right: synthesized.n_qubits(),
        });
    }
    if original.n() != p.n() {
        return Err(Error::DimensionMismatch {
            left: original.n(),
            right: p.n(),
        });
    }
    let m = circuit_to_parity_matrix(synthesized);
    for (register, logical) in p.pairs()? {
        for row in 0..original.n() {
            if original.get(row, logical) != m.get(row, register) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Renders each output wire's parity term as a `⊕`-joined label.
///
/// Wire `j` of the result lists, in ascending order, the input qubits whose
/// parity the circuit outputs on `j`, e.g. `⟨0⊕2⟩`. Useful for debug output
/// and documentation.
pub fn simulate_parity_labels(circuit: &CnotCircuit) -> Vec<String> {
    let m = circuit_to_parity_matrix(circuit);
    (0..circuit.n_qubits())
        .map(|j| {
            let term: Vec<String> = (0..circuit.n_qubits())
                .filter(|&i| m.get(i, j))
                .map(|i| i.to_string())
                .collect();
            format!("⟨{}⟩", term.join("⊕"))
        })
        .collect()
}
