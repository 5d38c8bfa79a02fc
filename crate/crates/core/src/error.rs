use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("quadrature did not converge: error estimate {err_estimate:e} for value {value:e}")]
    NonConvergence { value: f64, err_estimate: f64 },

    #[error("integrand returned a non-finite value at {at}")]
    NonFiniteSample { at: f64 },

    #[error("grid needs at least {needed} nodes, got {got}")]
    GridTooSmall { needed: usize, got: usize },

    #[error("bad range: {0}")]
    BadRange(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series cancellation too large: max term / result = {ratio:e}")]
    CancellationOverflow { ratio: f64 },

    #[error("value overflows f64 (log-modulus {log_mod})")]
    OverflowRisk { log_mod: f64 },

    #[error("theta table endpoint mismatch: {0}")]
    EndpointMismatch(String),

    #[error("theta table is not monotone (worst margin {margin:e} at t = {at})")]
    NotMonotone { margin: f64, at: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
