use thiserror::Error;

/// Errors produced by the numeric kernels, solvers and text/JSON readers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric (asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("octonion matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("octonion matrix is not completely invertible")]
    NotCompletelyInvertible,

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
