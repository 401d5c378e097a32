use thiserror::Error;

/// Errors raised by the bound evaluators and the eigenvalue solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration value violates one of its invariants.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A required constant was not supplied and cannot be computed.
    #[error("missing constant: {0}")]
    MissingConstant(String),

    #[error("no root found in [{x_min}, {x_max}]")]
    NoRootFound { x_min: f64, x_max: f64 },

    #[error("function returned non-finite value {fx} at x = {x}")]
    NonFinite { x: f64, fx: f64 },

    /// A computed quantity broke a guaranteed property.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by bad inputs rather than numerical failure.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::InvalidConfig(_) | Error::MissingConstant(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
