//! Shared low-level numerics: quadrature rules, complex Vandermonde residues,
//! cubic root bracketing, banded complex elimination, and log-log slope fits.

pub mod banded;
pub mod cubic;
pub mod dense;
pub mod quadrature;
pub mod regression;
pub mod vandermonde;

pub use banded::{solve_banded, BandedComplexSystem};
pub use cubic::{cubic_roots_in_interval, CubicRoot};
pub use dense::solve_dense;
pub use quadrature::{gauss_legendre, integrate_adaptive, QuadratureRule};
pub use regression::fit_loglog_slope;
pub use vandermonde::{moment_residuals, solve_vandermonde};
