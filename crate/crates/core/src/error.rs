use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A series could not be certified within its iteration cap.
    #[error("series did not converge: {0}")]
    Convergence(String),

    #[error("newton solver did not converge at xi = {xi} after {iterations} iterations (last residual {residual:e})")]
    NonConvergence {
        xi: f64,
        iterations: usize,
        residual: f64,
    },

    #[error("digit {digit} lies outside the distribution support (cap {cap})")]
    Support { digit: u64, cap: usize },

    #[error("empty digit sequence")]
    Empty,
}

impl Error {
    /// True for failures of a numerical procedure, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::Convergence(_) | Error::NonConvergence { .. })
    }
}
