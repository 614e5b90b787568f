use thiserror::Error;

/// Errors raised by the numerical routines and the audit harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: argument out of domain: {msg}")]
    Domain { op: &'static str, msg: String },

    #[error("quadrature did not converge: best estimate {estimate} with error {error:e}")]
    NoConvergence { estimate: f64, error: f64 },

    #[error("integrand returned {value} at x = {x}")]
    NonFinite { x: f64, value: f64 },

    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("unstable oracle: {0}")]
    Unstable(String),

    #[error("class number for D = {d}: L(1) inversion gave {raw}, {distance} away from an integer")]
    ClassNumberRounding { d: i64, raw: f64, distance: f64 },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("cannot parse `{token}`: {msg}")]
    Parse { token: String, msg: String },

    #[error("report output failed: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Error {
    Error::Domain { op, msg: msg.into() }
}
