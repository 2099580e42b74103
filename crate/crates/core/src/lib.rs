//! Wave-packet approximation of generalized eigenfunctions of self-adjoint
//! operators with continuous spectrum.
//!
//! The crate samples the resolvent at complex shifts prescribed by a
//! high-order rational smoothing kernel, combines the solves into a smooth
//! wave packet concentrated at a spectral parameter, and checks the results
//! against analytic spectral densities for a gallery of operators:
//! multiplication by a cubic, its rank-one integral perturbation, the free
//! 1D Laplacian, 1D Schrodinger operators, and the Dirichlet Laplacian on a
//! 2D strip.

pub mod error;
pub mod grid;
pub mod kernels;
pub mod measures;
pub mod numerics;
pub mod operators;
pub mod wavepacket;

pub use error::{CoreError, KernelError, MeasureError, NumericsError, OperatorError};
pub use grid::{GridFunction, SpectralVector, StripFunction, StripGridFunction};
pub use kernels::{build_kernel, equispaced_poles, MomentReport, RationalKernel};
pub use measures::{smoothed_density_oracle, DensityFunction};
pub use numerics::QuadratureRule;
pub use operators::{ResolventOracle, SpectrumInfo};
pub use wavepacket::{
    assemble, error_sweep, smoothed_density, sup_error, weak_pairing, AssembleOptions,
    ErrorSweep, ReferenceEigenfunction, SupError, SweepPoint, WavePacket,
};

/// Critical value `2 sqrt(3) / 9` of the cubic `x^3 - x`; the spectrum of the
/// multiplication operator is the symmetric interval with this half-width.
pub const CUBIC_SPECTRAL_EDGE: f64 = 0.384_900_179_459_750_5;
