use thiserror::Error;

/// Errors raised by the numerical engines and parameter validation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("argument outside the domain of {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("invalid {field}: {reason}")]
    Validation { field: &'static str, reason: String },

    #[error("{what} did not converge within {terms} terms (tail bound {tail:e})")]
    Convergence {
        what: &'static str,
        terms: usize,
        tail: f64,
    },

    #[error("dimension d = {0} is not supported (only d = 2)")]
    UnsupportedDimension(u32),

    #[error("finite-difference step collapsed: {0}")]
    StepCollapse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
