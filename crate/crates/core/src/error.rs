use thiserror::Error;

/// Error type shared across the crate.
#[derive(Debug, Error)]
pub enum SlrError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("degenerate pivot at row {row}: |value| = {magnitude:e}")]
    DegeneratePivot { row: usize, magnitude: f64 },

    #[error("enumeration budget exceeded: {candidates} supports > {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("row {0} rewritten twice within one improvement call")]
    RowRewrittenTwice(usize),

    #[error("sampler exhausted: requested {requested} samples")]
    SamplerExhausted { requested: usize },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),

    #[error("malformed file {path}: {reason}")]
    MalformedFile { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, SlrError>;

impl SlrError {
    pub fn dim(msg: impl Into<String>) -> Self {
        SlrError::DimensionMismatch(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        SlrError::InvalidArgument(msg.into())
    }

    pub fn non_finite(msg: impl Into<String>) -> Self {
        SlrError::NonFinite(msg.into())
    }
}
