//! Error taxonomy shared by every module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VqError {
    /// An index or argument fell outside its documented range.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A desk-scale size limit (matrix order, particle count, power) was exceeded.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// Two operands live on incompatible carriers.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A linear system or scaling factor is singular (coincident abscissae,
    /// repeated leading exponents, ...).
    #[error("singular: {0}")]
    Singular(String),

    /// Two independent computations of the same quantity disagreed.
    /// This is always a bug, never a tolerance issue; it must fail loudly.
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    /// Invalid construction parameters (cutoffs, windows, guards).
    #[error("configuration error: {0}")]
    Config(String),

    /// A floating-point evaluation exceeded its acceptance band.
    #[error("numerical check failed: {0}")]
    Numerical(String),

    /// An operator spectrum violated a precondition (e.g. non-invertible K3).
    #[error("spectrum error: {0}")]
    Spectrum(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, VqError>;
