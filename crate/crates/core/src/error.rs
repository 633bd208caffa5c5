use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("negative input to integer square root")]
    NegativeSqrt,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph has no planar embedding attached")]
    NoEmbedding,

    #[error("embedding is inconsistent: {0}")]
    BadEmbedding(String),

    #[error("Pfaffian determinant {0} is not a perfect square; orientation is wrong")]
    InexactPfaffian(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no perfect matchings")]
    NoMatchings,

    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("zero constant term in denominator")]
    ZeroConstantTerm,
}

pub type Result<T> = std::result::Result<T, Error>;
