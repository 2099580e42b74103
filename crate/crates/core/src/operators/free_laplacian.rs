//! Free 1D Laplacian -d^2/dx^2 on the line, diagonalized by the Fourier
//! transform with convention  fhat(k) = integral exp(-2 pi i k x) f(x) dx.
//!
//! Functions are carried by their transforms sampled on a uniform trapezoid
//! grid over |k| <= k_max; the resolvent divides by 4 pi^2 k^2 - z and wave
//! packets are synthesized back to x on demand.

use super::{reject_on_spectrum, ResolventOracle, SpectrumInfo};
use crate::error::OperatorError;
use crate::grid::GridFunction;
use crate::numerics::quadrature::{uniform_trapezoid, QuadratureRule};
use num_complex::Complex64;
use std::f64::consts::PI;

pub struct FreeLaplacianOracle {
    rule: QuadratureRule,
    spectrum: SpectrumInfo,
}

/// Oracle with quadrature over |k| <= k_max on `n_k` uniform nodes.
///
/// The trapezoid rule is spectrally accurate for Schwartz-class transforms.
pub fn free_laplacian_resolvent(
    k_max: f64,
    n_k: usize,
) -> Result<FreeLaplacianOracle, OperatorError> {
    let rule = uniform_trapezoid(n_k, -k_max, k_max).map_err(OperatorError::Numerics)?;
    Ok(FreeLaplacianOracle {
        rule,
        spectrum: SpectrumInfo {
            interval: (0.0, f64::INFINITY),
            multiplicity_breakpoints: vec![0.0],
        },
    })
}

impl FreeLaplacianOracle {
    pub fn rule(&self) -> &QuadratureRule {
        &self.rule
    }

    pub fn k_max(&self) -> f64 {
        self.rule.interval.1
    }

    /// Carries a function given by its analytically known transform onto the
    /// k-grid. Fails with a truncation warning when the transform has not
    /// decayed at the grid boundary.
    pub fn lift_transform(
        &self,
        f_hat: impl Fn(f64) -> Complex64,
    ) -> Result<GridFunction, OperatorError> {
        let f = GridFunction::from_complex_fn(&self.rule, f_hat);
        let peak = f.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let edge = f.values[0].norm().max(f.values[f.values.len() - 1].norm());
        if peak > 0.0 && edge / peak > 1e-12 {
            return Err(OperatorError::TruncationWarning(edge / peak));
        }
        Ok(f)
    }

    /// Numerically transforms samples of f on an x-grid onto the k-grid.
    pub fn lift_samples(&self, f: &GridFunction) -> Result<GridFunction, OperatorError> {
        let values = self
            .rule
            .nodes
            .iter()
            .map(|&k| {
                f.values
                    .iter()
                    .zip(&f.rule.nodes)
                    .zip(&f.rule.weights)
                    .map(|((v, &x), &w)| v * w * Complex64::from_polar(1.0, -2.0 * PI * k * x))
                    .sum()
            })
            .collect();
        GridFunction::new(self.rule.clone(), values)
    }

    /// Evaluates the physical-space function at the points `xs` by Fourier
    /// synthesis over the k-grid.
    pub fn synthesize(&self, f_hat: &GridFunction, xs: &[f64]) -> Vec<Complex64> {
        let k0 = self.rule.nodes[0];
        let step = if self.rule.len() > 1 {
            self.rule.nodes[1] - self.rule.nodes[0]
        } else {
            0.0
        };
        xs.iter()
            .map(|&x| {
                let rot = Complex64::from_polar(1.0, 2.0 * PI * step * x);
                let mut phase = Complex64::from_polar(1.0, 2.0 * PI * k0 * x);
                let mut sum = Complex64::default();
                for (v, &w) in f_hat.values.iter().zip(&self.rule.weights) {
                    sum += v * w * phase;
                    phase *= rot;
                }
                sum
            })
            .collect()
    }
}

impl ResolventOracle for FreeLaplacianOracle {
    type Vector = GridFunction;

    fn apply(&self, z: Complex64, f: &GridFunction) -> Result<GridFunction, OperatorError> {
        reject_on_spectrum(z, &self.spectrum)?;
        if f.len() != self.rule.len() {
            return Err(OperatorError::GridMismatch(format!(
                "transform on {} nodes, oracle grid has {}",
                f.len(),
                self.rule.len()
            )));
        }
        let values = f
            .values
            .iter()
            .zip(&self.rule.nodes)
            .map(|(v, &k)| v / (Complex64::new(4.0 * PI * PI * k * k, 0.0) - z))
            .collect();
        Ok(GridFunction {
            rule: f.rule.clone(),
            values,
        })
    }

    fn spectrum(&self) -> &SpectrumInfo {
        &self.spectrum
    }
}

/// The self-dual Gaussian: both f and fhat equal exp(-pi t^2).
pub fn gaussian_transform(k: f64) -> Complex64 {
    Complex64::new((-PI * k * k).exp(), 0.0)
}
