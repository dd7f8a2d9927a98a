use thiserror::Error;

use crate::freealg::Variable;

/// Errors raised by the algebra, rewriting and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (e.g. `n < 2`).
    #[error("domain error: {0}")]
    Domain(String),

    /// The input degree exceeds the degree bound a rule set was built for.
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: usize, bound: usize },

    /// Evaluation met a variable with no value in the assignment.
    #[error("variable {0} is not assigned")]
    Unassigned(Variable),

    /// Completion produced more rules than the configured cap.
    #[error("completion exceeded the cap of {cap} rules at degree {degree}")]
    RuleCap { cap: usize, degree: usize },

    /// A dense computation would exceed its size guard.
    #[error("size guard exceeded: {size} > {limit}")]
    Guard { size: usize, limit: usize },

    /// Malformed expression text.
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
