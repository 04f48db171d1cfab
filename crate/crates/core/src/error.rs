//! Error taxonomy shared by every module of the crate.
//!
//! Errors split into three broad families, which the CLI maps onto its exit
//! codes: usage errors (bad arguments, malformed input, precondition
//! violations), verification failures (a synthesized circuit does not match
//! its source), and internal invariant breaches (bugs — these should never
//! fire on valid inputs).

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A qubit / vertex / row / column index is outside `[0, n)`.
    #[error("index {index} out of range for size {n}")]
    IndexOutOfRange { index: usize, n: usize },

    /// Two indices that must differ are equal (e.g. a gate's control and
    /// target, or the two endpoints of an edge).
    #[error("indices must differ, both are {index}")]
    EqualIndices { index: usize },

    /// Two objects that must agree on dimension do not.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// An operation that requires a connected (sub)graph was handed a
    /// disconnected one.
    #[error("graph is not connected over its active vertices")]
    Disconnected,

    /// A vertex that must be active (present) in the topology is not.
    #[error("vertex {vertex} is not active")]
    InactiveVertex { vertex: usize },

    /// Removing this vertex would disconnect the remaining graph.
    #[error("vertex {vertex} is a cut vertex; removing it would disconnect the graph")]
    CuttingVertex { vertex: usize },

    /// A qubit map was used before every register was assigned.
    #[error("qubit map is incomplete")]
    IncompleteMap,

    /// A parity matrix that must be invertible over GF(2) is singular.
    #[error("matrix is singular over GF(2)")]
    SingularMatrix,

    /// A Steiner tree handed to an elimination subroutine does not satisfy
    /// that subroutine's precondition.
    #[error("invalid Steiner tree: {reason}")]
    InvalidTree { reason: String },

    /// A topology name not present in the builtin catalog.
    #[error("unknown topology `{name}`; available: {catalog}")]
    UnknownTopology { name: String, catalog: String },

    /// A configuration value outside its documented range.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Line-oriented text input could not be parsed. Lines are 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A synthesized circuit failed equivalence or legality verification.
    /// Produced by the benchmark harness, which verifies every instance.
    #[error("verification failed: {0}")]
    Verification(String),

    /// An internal invariant was violated; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Helper for internal invariant breaches.
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Helper for invalid injected Steiner trees.
    pub(crate) fn tree(reason: impl Into<String>) -> Self {
        Error::InvalidTree {
            reason: reason.into(),
        }
    }
}
