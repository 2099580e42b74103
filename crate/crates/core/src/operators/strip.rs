//! Dirichlet Laplacian on the strip {x real, -1 < y < 1}.
//!
//! Functions are expanded in the transverse Dirichlet modes cos(n pi y / 2)
//! (odd n) and sin(n pi y / 2) (even n); the modes decouple and each
//! longitudinal coefficient sees a 1D Fourier-multiplier resolvent shifted by
//! the transverse eigenvalue (n pi / 2)^2. The continuous spectrum starts at
//! pi^2/4 and its multiplicity jumps by two at every transverse eigenvalue.

use super::{reject_on_spectrum, ResolventOracle, SpectrumInfo};
use crate::error::OperatorError;
use crate::grid::{StripFunction, StripGridFunction};
use crate::numerics::quadrature::{uniform_trapezoid, QuadratureRule};
use num_complex::Complex64;
use std::f64::consts::PI;

pub struct StripLaplacianOracle {
    rule: QuadratureRule,
    transverse_modes: usize,
    spectrum: SpectrumInfo,
}

/// Transverse eigenvalue of mode n (1-based): (n pi / 2)^2.
pub fn transverse_eigenvalue(n: usize) -> f64 {
    let half = n as f64 * PI / 2.0;
    half * half
}

/// Oracle with longitudinal Fourier quadrature over |k| <= k_max on `n_k`
/// nodes and `n_y` transverse modes.
pub fn strip_laplacian_resolvent(
    k_max: f64,
    n_k: usize,
    n_y: usize,
) -> Result<StripLaplacianOracle, OperatorError> {
    if n_y == 0 {
        return Err(OperatorError::Numerics(
            crate::error::NumericsError::InsufficientData { needed: 1, got: 0 },
        ));
    }
    let rule = uniform_trapezoid(n_k, -k_max, k_max).map_err(OperatorError::Numerics)?;
    let breakpoints = (1..=n_y).map(transverse_eigenvalue).collect();
    Ok(StripLaplacianOracle {
        rule,
        transverse_modes: n_y,
        spectrum: SpectrumInfo {
            interval: (transverse_eigenvalue(1), f64::INFINITY),
            multiplicity_breakpoints: breakpoints,
        },
    })
}

impl StripLaplacianOracle {
    pub fn rule(&self) -> &QuadratureRule {
        &self.rule
    }

    pub fn transverse_modes(&self) -> usize {
        self.transverse_modes
    }

    /// Spectral multiplicity at lambda: two per active transverse mode.
    pub fn multiplicity(&self, lambda: f64) -> usize {
        2 * (1..=self.transverse_modes)
            .filter(|&n| transverse_eigenvalue(n) < lambda)
            .count()
    }

    /// Carries a function given by per-mode longitudinal transforms onto the
    /// grid. Transforms beyond the supplied slice are zero. Warns when the
    /// transverse tail has not decayed at the mode cutoff.
    pub fn lift_mode_transforms(
        &self,
        transforms: &[&dyn Fn(f64) -> Complex64],
    ) -> Result<StripFunction, OperatorError> {
        let modes: Vec<Vec<Complex64>> = (0..self.transverse_modes)
            .map(|idx| {
                self.rule
                    .nodes
                    .iter()
                    .map(|&k| transforms.get(idx).map_or(Complex64::default(), |f| f(k)))
                    .collect()
            })
            .collect();
        let f = StripFunction::new(self.rule.clone(), modes)?;
        let energies = f.mode_energies();
        let total: f64 = energies.iter().sum();
        if total > 0.0 && energies[self.transverse_modes - 1] / total > 1e-12 {
            return Err(OperatorError::TruncationWarning(
                energies[self.transverse_modes - 1] / total,
            ));
        }
        Ok(f)
    }

    /// Synthesizes per-mode coefficient functions on an explicit x-grid.
    pub fn synthesize(&self, f: &StripFunction, xs: &[f64]) -> StripGridFunction {
        let k0 = self.rule.nodes[0];
        let step = if self.rule.len() > 1 {
            self.rule.nodes[1] - self.rule.nodes[0]
        } else {
            0.0
        };
        let coefficients = f
            .modes
            .iter()
            .map(|coeffs| {
                xs.iter()
                    .map(|&x| {
                        let rot = Complex64::from_polar(1.0, 2.0 * PI * step * x);
                        let mut phase = Complex64::from_polar(1.0, 2.0 * PI * k0 * x);
                        let mut sum = Complex64::default();
                        for (v, &w) in coeffs.iter().zip(&self.rule.weights) {
                            sum += v * w * phase;
                            phase *= rot;
                        }
                        sum
                    })
                    .collect()
            })
            .collect();
        StripGridFunction {
            x_grid: xs.to_vec(),
            coefficients,
        }
    }
}

impl ResolventOracle for StripLaplacianOracle {
    type Vector = StripFunction;

    fn apply(&self, z: Complex64, f: &StripFunction) -> Result<StripFunction, OperatorError> {
        reject_on_spectrum(z, &self.spectrum)?;
        if f.mode_count() != self.transverse_modes || f.rule.len() != self.rule.len() {
            return Err(OperatorError::GridMismatch(
                "strip function layout does not match oracle".into(),
            ));
        }
        let modes = f
            .modes
            .iter()
            .enumerate()
            .map(|(idx, coeffs)| {
                let shift = transverse_eigenvalue(idx + 1);
                coeffs
                    .iter()
                    .zip(&self.rule.nodes)
                    .map(|(v, &k)| {
                        v / (Complex64::new(4.0 * PI * PI * k * k + shift, 0.0) - z)
                    })
                    .collect()
            })
            .collect();
        Ok(StripFunction {
            rule: f.rule.clone(),
            modes,
        })
    }

    fn spectrum(&self) -> &SpectrumInfo {
        &self.spectrum
    }
}
