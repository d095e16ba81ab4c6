use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor or layer shapes do not line up; names both shapes.
    #[error("dimension mismatch in {op}: {lhs} vs {rhs}")]
    Dimension {
        op: &'static str,
        lhs: String,
        rhs: String,
    },

    /// Bad data content (out-of-range label, unparseable cell, ...).
    #[error("data error: {0}")]
    Data(String),

    /// API misuse (non-scalar backward root, empty input, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// A dataset file does not match the manifest's expectations.
    #[error("manifest validation failed for {dataset}: expected {expected}, found {found}")]
    Validation {
        dataset: String,
        expected: String,
        found: String,
    },

    /// Train/test split could not satisfy stratification.
    #[error("stratification error: {0}")]
    Stratification(String),

    /// Invalid benchmark configuration (parameter parity violation, bad widths, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// NaN/Inf detected in parameters, gradients, or loss.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn dimension(op: &'static str, lhs: impl std::fmt::Debug, rhs: impl std::fmt::Debug) -> Self {
        Error::Dimension {
            op,
            lhs: format!("{lhs:?}"),
            rhs: format!("{rhs:?}"),
        }
    }
}
