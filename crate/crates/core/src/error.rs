use thiserror::Error;

/// Errors raised by geometric kernels, optimizers and the filling-pair pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// A numeric argument lies outside the domain where the formula is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural problem with a combinatorial map, pinned to one dart.
    #[error("invalid map at dart {dart}: {reason}")]
    InvalidMap { dart: usize, reason: String },

    /// Input that is well formed but violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A mathematical identity or invariant failed to hold.
    #[error("inconsistent: {0}")]
    Inconsistent(String),

    /// Random start generation gave up after its retry budget.
    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for errors caused by malformed or invalid input documents.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidMap { .. } | Error::InvalidInput(_) | Error::Json(_) | Error::Domain(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
