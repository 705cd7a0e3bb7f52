use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid spine: {0}")]
    InvalidSpine(String),
    #[error("invalid degree sequence: {0}")]
    InvalidSequence(String),
    #[error("degree sequence has no vertex of degree at least 2")]
    EmptyResult,
    #[error("empty degree sequence")]
    EmptySequence,
    #[error("spine index {index} out of range for spine of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("matching polynomial of degree {degree} cannot belong to a forest on {vertices} vertices")]
    DegreeMismatch { degree: usize, vertices: usize },
    #[error("quadrature did not converge: refinement gap {gap:e} exceeds {tolerance:e}")]
    NonConvergent { gap: f64, tolerance: f64 },
    #[error("energy methods disagree: {0}")]
    CrossCheckFailed(String),
    #[error("sequences have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("sequences are not strictly majorized")]
    NotStrict,
    #[error("sequences are not comparable: {0}")]
    NotComparable(String),
    #[error("invalid diameter {diameter} for {vertices} vertices")]
    InvalidDiameter { diameter: usize, vertices: usize },
}
