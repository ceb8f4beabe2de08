use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("query budget of {limit} exhausted")]
    BudgetExhausted { limit: u64 },

    #[error("cannot linearly sample an all-zero metric")]
    DegenerateZero,

    #[error("{what} is capped at n = {cap}, got n = {n}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    /// A computed probability left [0, 1] beyond floating-point tolerance.
    /// This is how a failed (silently wrong) decomposition surfaces.
    #[error("internal consistency: {0}")]
    Consistency(String),

    #[error("no edges")]
    NoEdges,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
