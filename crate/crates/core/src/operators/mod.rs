//! Gallery of self-adjoint operators, each exposed through its resolvent.
//!
//! Every oracle applies `(A - z)^{-1}` to a sampled function for z off the
//! real axis and carries the spectrum metadata needed by the wave-packet
//! assembly and the reference densities.

pub mod free_laplacian;
pub mod multiplication;
pub mod rank_one;
pub mod schrodinger;
pub mod strip;

pub use free_laplacian::{free_laplacian_resolvent, FreeLaplacianOracle};
pub use multiplication::{
    multiplication_resolvent, multiplication_resolvent_with_rule, MultiplicationOracle,
};
pub use rank_one::{rank_one_perturbed_resolvent, RankOneOracle};
pub use schrodinger::{schrodinger_resolvent, SchrodingerOracle};
pub use strip::{strip_laplacian_resolvent, StripLaplacianOracle};

use crate::error::OperatorError;
use crate::grid::SpectralVector;
use num_complex::Complex64;

/// Location of the (absolutely continuous) spectrum and the points where its
/// multiplicity changes.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumInfo {
    /// Closed interval containing the spectrum; the right endpoint may be
    /// `f64::INFINITY` for half-line spectra.
    pub interval: (f64, f64),
    pub multiplicity_breakpoints: Vec<f64>,
}

impl SpectrumInfo {
    pub fn contains(&self, lambda: f64) -> bool {
        lambda >= self.interval.0 && lambda <= self.interval.1
    }
}

/// Resolvent access to a self-adjoint operator.
pub trait ResolventOracle {
    type Vector: SpectralVector;

    /// Applies `(A - z)^{-1}` to `f`. Requires `Im z != 0` whenever `Re z`
    /// lies in the spectrum.
    fn apply(&self, z: Complex64, f: &Self::Vector) -> Result<Self::Vector, OperatorError>;

    fn spectrum(&self) -> &SpectrumInfo;

    /// True when the operator has real coefficients, so that
    /// `R(conj z) conj(f) = conj(R(z) f)` and conjugate pole pairs can share
    /// one solve.
    fn is_real(&self) -> bool {
        true
    }
}

pub(crate) fn reject_on_spectrum(
    z: Complex64,
    spectrum: &SpectrumInfo,
) -> Result<(), OperatorError> {
    if z.im == 0.0 && spectrum.contains(z.re) {
        return Err(OperatorError::EvaluationOnSpectrum(z));
    }
    Ok(())
}
