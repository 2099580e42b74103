//! Error types shared across the crate.

use thiserror::Error;

/// Errors from the low-level numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("duplicate poles: nodes {0} and {1} coincide within 1e-14")]
    DuplicatePoles(usize, usize),
    #[error("invalid interval: left endpoint {0} is not below right endpoint {1}")]
    InvalidInterval(f64, f64),
    #[error("singular system: pivot magnitude {0:e} underflowed at row {1}")]
    SingularSystem(f64, usize),
    #[error("insufficient data: need at least {needed} points, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("nonpositive value at index {0}: log-log fit requires strictly positive data")]
    NonpositiveValue(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Errors from rational-kernel construction and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KernelError {
    #[error("pole {0} has nonpositive imaginary part; all poles must lie in the open upper half-plane")]
    PoleInLowerHalfPlane(usize),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("nonpositive epsilon: {0}")]
    NonpositiveEpsilon(f64),
    #[error("kernel order must be at least 1")]
    EmptyPoleSet,
}

/// Errors from resolvent oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OperatorError {
    #[error("resolvent evaluated at z = {0} on the spectrum")]
    EvaluationOnSpectrum(num_complex::Complex<f64>),
    #[error("spectral truncation too coarse: boundary transform magnitude ratio {0:e} exceeds 1e-12")]
    TruncationWarning(f64),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("rank-one denominator vanished at z = {0}")]
    ResonantShift(num_complex::Complex<f64>),
}

/// Errors from reference spectral densities.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error("density evaluated within 1e-12 of the singular point {0}")]
    SingularPoint(f64),
}

/// Errors from wave-packet assembly and sweeps.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error("empty window: no grid nodes inside [{0}, {1}]")]
    EmptyWindow(f64, f64),
    #[error("no closed-form reference available: {0}")]
    NoReferenceAvailable(String),
}
