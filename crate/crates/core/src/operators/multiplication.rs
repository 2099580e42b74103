//! Multiplication by the cubic p(x) = x^3 - x on L2(-1, 1).
//!
//! The resolvent is diagonal on any sampling grid: dividing by p(x) - z.
//! The spectrum is the closure of the range of p over (-1, 1), with the
//! multiplicity dropping from 2 to 1 across the origin.

use super::{reject_on_spectrum, ResolventOracle, SpectrumInfo};
use crate::error::OperatorError;
use crate::grid::GridFunction;
use crate::numerics::quadrature::{gauss_legendre, QuadratureRule};
use crate::CUBIC_SPECTRAL_EDGE;
use num_complex::Complex64;

pub struct MultiplicationOracle {
    rule: QuadratureRule,
    p_values: Vec<f64>,
    spectrum: SpectrumInfo,
}

/// Default oracle on a 2000-node Gauss-Legendre grid.
///
/// That resolution keeps the near-pole factor 1/((p - lambda)^2 + eps^2)
/// resolvable down to eps of about 1e-2; sweeps that push eps lower should
/// construct the oracle on a finer (composite) rule.
pub fn multiplication_resolvent() -> MultiplicationOracle {
    multiplication_resolvent_with_rule(gauss_legendre(2000, -1.0, 1.0).unwrap())
}

/// Oracle on a caller-supplied quadrature rule over (-1, 1).
pub fn multiplication_resolvent_with_rule(rule: QuadratureRule) -> MultiplicationOracle {
    let p_values = rule.nodes.iter().map(|&x| x * x * x - x).collect();
    MultiplicationOracle {
        rule,
        p_values,
        spectrum: SpectrumInfo {
            interval: (-CUBIC_SPECTRAL_EDGE, CUBIC_SPECTRAL_EDGE),
            multiplicity_breakpoints: vec![-CUBIC_SPECTRAL_EDGE, 0.0, CUBIC_SPECTRAL_EDGE],
        },
    }
}

impl MultiplicationOracle {
    pub fn rule(&self) -> &QuadratureRule {
        &self.rule
    }

    pub fn symbol_values(&self) -> &[f64] {
        &self.p_values
    }

    /// Samples a real-valued function on the oracle's grid.
    pub fn lift(&self, f: impl Fn(f64) -> f64) -> GridFunction {
        GridFunction::from_real_fn(&self.rule, f)
    }
}

impl ResolventOracle for MultiplicationOracle {
    type Vector = GridFunction;

    fn apply(&self, z: Complex64, f: &GridFunction) -> Result<GridFunction, OperatorError> {
        reject_on_spectrum(z, &self.spectrum)?;
        if f.len() != self.p_values.len() {
            return Err(OperatorError::GridMismatch(format!(
                "function on {} nodes, oracle grid has {}",
                f.len(),
                self.p_values.len()
            )));
        }
        let values = f
            .values
            .iter()
            .zip(&self.p_values)
            .map(|(v, &p)| v / (Complex64::new(p, 0.0) - z))
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
