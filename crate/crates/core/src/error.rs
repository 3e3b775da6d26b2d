use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZetaError {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// `s` is at, or numerically too close to, the pole at `s = 1`.
    #[error("pole error: |s - 1| = {distance:e} is within {guard:e} of the pole at s = 1")]
    Pole { distance: f64, guard: f64 },

    /// The identity does not store enough series coefficients for the requested precision.
    #[error("capacity error: truncation needs coefficients up to k = {required_k}, identity stores up to k = {stored_k}")]
    Capacity { required_k: u32, stored_k: u32 },

    /// An exact algebraic step produced something it never should.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = ZetaError> = std::result::Result<T, E>;
