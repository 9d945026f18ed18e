use thiserror::Error;

/// Errors raised by the evaluators, oracles and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("infeasible tolerance: {0}")]
    InfeasibleTolerance(String),

    #[error("exponent overflow: gamma*t = {0} exceeds the representable range")]
    Overflow(f64),

    #[error("minimizer did not converge within {0} iterations")]
    IterationLimit(usize),

    #[error("range error: {0}")]
    Range(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
