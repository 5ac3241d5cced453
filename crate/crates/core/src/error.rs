use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the domain of a holomorphic branch or special function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The symbol inverse does not exist; `(z, p)` lies on the dispersion curve.
    #[error("singular symbol at z = {z}, p = {p}: |c_z(p)| = {magnitude:e} is below threshold {threshold:e}")]
    Singular {
        z: num_complex::Complex64,
        p: f64,
        magnitude: f64,
        threshold: f64,
    },

    #[error("index {0} out of range for Pauli matrices (expected 0..=3)")]
    Index(usize),

    #[error("finite-difference step h = {h} must satisfy 0 < h < |x|/4 = {limit}")]
    Step { h: f64, limit: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    /// An iterative scheme ran out of refinement levels.
    #[error("no convergence: {0}")]
    Convergence(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
