//! Cubic multiplication plus a Gaussian rank-one integral kernel.
//!
//! `[Af](x) = (x^3 - x) f(x) + g(x) <f, g>` with `g(x) = exp(-x^2)`. The
//! resolvent comes from the Sherman-Morrison identity applied to the
//! unperturbed diagonal resolvent; the discrete pairings are bilinear
//! quadrature sums because g is real.

use super::multiplication::{multiplication_resolvent_with_rule, MultiplicationOracle};
use super::{reject_on_spectrum, ResolventOracle, SpectrumInfo};
use crate::error::OperatorError;
use crate::grid::{GridFunction, SpectralVector};
use crate::numerics::quadrature::{gauss_legendre, QuadratureRule};
use num_complex::Complex64;

pub struct RankOneOracle {
    base: MultiplicationOracle,
    g: GridFunction,
}

/// Oracle on the default 2000-node Gauss-Legendre grid.
pub fn rank_one_perturbed_resolvent() -> RankOneOracle {
    rank_one_perturbed_resolvent_with_rule(gauss_legendre(2000, -1.0, 1.0).unwrap())
}

/// Oracle on a caller-supplied rule over (-1, 1).
pub fn rank_one_perturbed_resolvent_with_rule(rule: QuadratureRule) -> RankOneOracle {
    let base = multiplication_resolvent_with_rule(rule);
    let g = base.lift(|x| (-x * x).exp());
    RankOneOracle { base, g }
}

impl RankOneOracle {
    pub fn rule(&self) -> &QuadratureRule {
        self.base.rule()
    }

    pub fn lift(&self, f: impl Fn(f64) -> f64) -> GridFunction {
        self.base.lift(f)
    }

    /// The rank-one direction g sampled on the grid.
    pub fn gaussian(&self) -> &GridFunction {
        &self.g
    }

    /// Bilinear quadrature pairing `sum_i w_i u_i v_i` (no conjugation).
    pub fn bilinear(u: &GridFunction, v: &GridFunction) -> Complex64 {
        u.values
            .iter()
            .zip(&v.values)
            .zip(&u.rule.weights)
            .map(|((a, b), &w)| w * a * b)
            .sum()
    }

    /// Dense discretization `diag(p) + g (w.g)^T` minus the shift, for
    /// residual checks against the Sherman-Morrison path.
    pub fn dense_shifted_matrix(&self, z: Complex64) -> Vec<Vec<Complex64>> {
        let n = self.g.len();
        let p = self.base.symbol_values();
        let w = &self.rule().weights;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut entry =
                            Complex64::new(self.g.values[i].re * w[j] * self.g.values[j].re, 0.0);
                        if i == j {
                            entry += Complex64::new(p[i], 0.0) - z;
                        }
                        entry
                    })
                    .collect()
            })
            .collect()
    }
}

impl ResolventOracle for RankOneOracle {
    type Vector = GridFunction;

    fn apply(&self, z: Complex64, f: &GridFunction) -> Result<GridFunction, OperatorError> {
        reject_on_spectrum(z, self.base.spectrum())?;
        let rg = self.base.apply(z, &self.g)?;
        let denom = Complex64::new(1.0, 0.0) + Self::bilinear(&rg, &self.g);
        if denom.norm() < 1e-14 {
            return Err(OperatorError::ResonantShift(z));
        }
        // Sherman-Morrison for a +g(x)g(y) update carries a minus sign here;
        // pinned by the dense-discretization residual test, not by eye.
        let c = -Self::bilinear(&rg, f) / denom;
        let mut shifted = f.clone();
        shifted.add_scaled(c, &self.g)?;
        self.base.apply(z, &shifted)
    }

    fn spectrum(&self) -> &SpectrumInfo {
        self.base.spectrum()
    }
}
