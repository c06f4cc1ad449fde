use thiserror::Error;

use crate::kernel::Estimate;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid signal: {0}")]
    InvalidSignal(String),

    /// Adaptive quadrature ran out of subdivisions. The best value found so far
    /// is carried along with its (honest) error estimate.
    #[error("subdivision limit reached: value {} with error estimate {}", .0.value, .0.error_estimate)]
    SubdivisionLimit(Estimate),

    #[error("series budget exceeded after {terms} terms (tail bound {tail_bound:e})")]
    BudgetExceeded { terms: u64, tail_bound: f64 },

    #[error("transfer function sample {index} has imaginary part {imag:e}")]
    NonRealInput { index: usize, imag: f64 },

    #[error("kernel has zero norm")]
    ZeroKernel,

    #[error("negative radicand {0:e} in distance formula")]
    NegativeRadicand(f64),

    #[error("argument {0} outside [0, 1]")]
    DomainError(f64),

    #[error("sample spacings differ: {left} vs {right}")]
    GridMismatch { left: f64, right: f64 },

    #[error("ladder must be strictly monotone with at least 4 values")]
    NonMonotoneLadder,
}
