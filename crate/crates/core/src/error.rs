use thiserror::Error;

/// Errors produced by the semiring toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or precondition-violating input.
    #[error("invalid input: {0}")]
    Input(String),

    /// Two tables (or a table and a partition) disagree on the element count.
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// A size guard was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A search ran out of its node or time budget before finishing.
    #[error("budget exhausted after {nodes} nodes ({completed}/{total} addition tables finished)")]
    Budget {
        nodes: u64,
        completed: usize,
        total: usize,
    },

    /// A congruence-simple semiring matched none of the classification cases.
    #[error("classification theorem violated: {reason}\n{dump}")]
    TheoremViolation { reason: String, dump: String },

    /// Catalog file could not be loaded.
    #[error("catalog line {line}: {reason}")]
    Catalog { line: usize, reason: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
