use thiserror::Error;

/// Errors raised by quiver construction and the operations built on top of it.
///
/// Vertex indices carried in error values are 1-based, matching the text
/// formats users write.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("loop arrow at vertex {0}")]
    LoopArrow(usize),
    #[error("more than one arrow between vertices {0} and {1}")]
    DuplicatePair(usize, usize),
    #[error("arrow {0}->{1} has a nonpositive value")]
    NonPositiveValue(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("arrow index {index} out of range (quiver has {count} arrows)")]
    ArrowOutOfRange { index: usize, count: usize },
    #[error("empty vertex subset")]
    EmptySubset,
    #[error("no positive symmetrizer exists: constraint violated on arrow {0}->{1}")]
    InconsistentSymmetrizer(usize, usize),
    #[error("symmetrizer must have {expected} positive entries")]
    BadSymmetrizer { expected: usize },
    #[error("matrix is not sign-skew-symmetric at ({0},{1})")]
    NotSignSkewSymmetric(usize, usize),
    #[error("matrix has a nonzero diagonal entry at vertex {0}")]
    NonZeroDiagonal(usize),
    #[error("matrix rows have inconsistent lengths")]
    Shape,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("quivers have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("polynomial has a nonzero coefficient at odd codegree {0}")]
    NotExchangePolynomial(usize),
    #[error("quiver is not connected")]
    Disconnected,
    #[error("quiver is not simply-laced")]
    NotSimplyLaced,
    #[error("underlying graph is not a tree")]
    NotATree,
    #[error("mutation class search was truncated; result would be unsound")]
    IncompleteClass,
    #[error("invalid rational number {0:?}")]
    BadRational(String),
    #[error("invalid limits specification {0:?}")]
    BadLimits(String),
}

pub type Result<T, E = QuiverError> = std::result::Result<T, E>;
