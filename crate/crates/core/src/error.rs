use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Lie type {letter}{rank}: {reason}")]
    InvalidType {
        letter: char,
        rank: usize,
        reason: String,
    },
    #[error("weight {weight:?} is not dominant integral")]
    NonDominant { weight: Vec<i64> },
    #[error("dimension {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("the zero polynomial has no squarefree decomposition")]
    ZeroPolynomial,
    #[error("matrix is not symmetric")]
    Asymmetric,
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("{0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}
