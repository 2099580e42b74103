//! Sampled functions over quadrature grids: the universal vector type for
//! inputs f, test functions phi, and assembled wave packets.

use crate::error::OperatorError;
use crate::numerics::QuadratureRule;
use num_complex::Complex64;

/// A complex-valued function sampled on the nodes of a quadrature rule.
///
/// Inner products are quadrature sums, conjugate linear in the second
/// argument.
#[derive(Debug, Clone)]
pub struct GridFunction {
    pub rule: QuadratureRule,
    pub values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(rule: QuadratureRule, values: Vec<Complex64>) -> Result<Self, OperatorError> {
        if rule.len() != values.len() {
            return Err(OperatorError::GridMismatch(format!(
                "{} nodes vs {} values",
                rule.len(),
                values.len()
            )));
        }
        Ok(Self { rule, values })
    }

    /// Samples a real-valued function on the rule's nodes.
    pub fn from_real_fn(rule: &QuadratureRule, f: impl Fn(f64) -> f64) -> Self {
        let values = rule.nodes.iter().map(|&x| Complex64::new(f(x), 0.0)).collect();
        Self {
            rule: rule.clone(),
            values,
        }
    }

    /// Samples a complex-valued function on the rule's nodes.
    pub fn from_complex_fn(rule: &QuadratureRule, f: impl Fn(f64) -> Complex64) -> Self {
        let values = rule.nodes.iter().map(|&x| f(x)).collect();
        Self {
            rule: rule.clone(),
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Vector operations shared by all spectral function representations.
pub trait SpectralVector: Clone {
    /// Same grid / mode layout, all entries zero.
    fn zeros_like(&self) -> Self;

    /// `self += c * other`.
    fn add_scaled(&mut self, c: Complex64, other: &Self) -> Result<(), OperatorError>;

    /// Entrywise complex conjugate.
    fn conjugate(&self) -> Self;

    /// Quadrature inner product, conjugate linear in `other`.
    fn inner(&self, other: &Self) -> Result<Complex64, OperatorError>;

    fn norm(&self) -> f64;

    /// Norm of the imaginary part, for reality diagnostics.
    fn imag_norm(&self) -> f64;

    fn compatible_with(&self, other: &Self) -> bool;
}

impl SpectralVector for GridFunction {
    fn zeros_like(&self) -> Self {
        Self {
            rule: self.rule.clone(),
            values: vec![Complex64::default(); self.values.len()],
        }
    }

    fn add_scaled(&mut self, c: Complex64, other: &Self) -> Result<(), OperatorError> {
        if !self.compatible_with(other) {
            return Err(OperatorError::GridMismatch(
                "add_scaled on different grids".into(),
            ));
        }
        for (v, o) in self.values.iter_mut().zip(&other.values) {
            *v += c * o;
        }
        Ok(())
    }

    fn conjugate(&self) -> Self {
        Self {
            rule: self.rule.clone(),
            values: self.values.iter().map(Complex64::conj).collect(),
        }
    }

    fn inner(&self, other: &Self) -> Result<Complex64, OperatorError> {
        if !self.compatible_with(other) {
            return Err(OperatorError::GridMismatch(
                "inner product on different grids".into(),
            ));
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .zip(&self.rule.weights)
            .map(|((u, v), &w)| w * u * v.conj())
            .sum())
    }

    fn norm(&self) -> f64 {
        self.values
            .iter()
            .zip(&self.rule.weights)
            .map(|(v, &w)| w * v.norm_sqr())
            .sum::<f64>()
            .max(0.0)
            .sqrt()
    }

    fn imag_norm(&self) -> f64 {
        self.values
            .iter()
            .zip(&self.rule.weights)
            .map(|(v, &w)| w * v.im * v.im)
            .sum::<f64>()
            .max(0.0)
            .sqrt()
    }

    fn compatible_with(&self, other: &Self) -> bool {
        self.values.len() == other.values.len() && self.rule.interval == other.rule.interval
    }
}

/// A function on the 2D strip expanded in transverse Dirichlet modes, with
/// each mode's longitudinal part sampled on a shared Fourier grid.
///
/// Mode n is `cos(n pi y / 2)` for odd n and `sin(n pi y / 2)` for even n on
/// the transverse section (-1, 1); both families have unit L2 norm, so
/// energies add across modes.
#[derive(Debug, Clone)]
pub struct StripFunction {
    /// Longitudinal grid shared by all modes (Fourier variable).
    pub rule: QuadratureRule,
    /// `modes[n-1]` holds the coefficient function of transverse mode n.
    pub modes: Vec<Vec<Complex64>>,
}

impl StripFunction {
    pub fn new(rule: QuadratureRule, modes: Vec<Vec<Complex64>>) -> Result<Self, OperatorError> {
        if modes.iter().any(|m| m.len() != rule.len()) {
            return Err(OperatorError::GridMismatch(
                "mode coefficient length does not match grid".into(),
            ));
        }
        Ok(Self { rule, modes })
    }

    pub fn mode_count(&self) -> usize {
        self.modes.len()
    }

    /// L2 energy carried by each transverse mode.
    pub fn mode_energies(&self) -> Vec<f64> {
        self.modes
            .iter()
            .map(|coeffs| {
                coeffs
                    .iter()
                    .zip(&self.rule.weights)
                    .map(|(v, &w)| w * v.norm_sqr())
                    .sum()
            })
            .collect()
    }

    /// Fraction of the total energy in transverse mode `n` (1-based).
    pub fn mode_energy_fraction(&self, n: usize) -> f64 {
        let energies = self.mode_energies();
        let total: f64 = energies.iter().sum();
        if total == 0.0 {
            0.0
        } else {
            energies[n - 1] / total
        }
    }
}

impl SpectralVector for StripFunction {
    fn zeros_like(&self) -> Self {
        Self {
            rule: self.rule.clone(),
            modes: self
                .modes
                .iter()
                .map(|m| vec![Complex64::default(); m.len()])
                .collect(),
        }
    }

    fn add_scaled(&mut self, c: Complex64, other: &Self) -> Result<(), OperatorError> {
        if !self.compatible_with(other) {
            return Err(OperatorError::GridMismatch(
                "add_scaled on different strip layouts".into(),
            ));
        }
        for (mine, theirs) in self.modes.iter_mut().zip(&other.modes) {
            for (v, o) in mine.iter_mut().zip(theirs) {
                *v += c * o;
            }
        }
        Ok(())
    }

    fn conjugate(&self) -> Self {
        Self {
            rule: self.rule.clone(),
            modes: self
                .modes
                .iter()
                .map(|m| m.iter().map(Complex64::conj).collect())
                .collect(),
        }
    }

    fn inner(&self, other: &Self) -> Result<Complex64, OperatorError> {
        if !self.compatible_with(other) {
            return Err(OperatorError::GridMismatch(
                "inner product on different strip layouts".into(),
            ));
        }
        let mut sum = Complex64::default();
        for (mine, theirs) in self.modes.iter().zip(&other.modes) {
            for ((u, v), &w) in mine.iter().zip(theirs).zip(&self.rule.weights) {
                sum += w * u * v.conj();
            }
        }
        Ok(sum)
    }

    fn norm(&self) -> f64 {
        self.mode_energies().iter().sum::<f64>().max(0.0).sqrt()
    }

    fn imag_norm(&self) -> f64 {
        self.modes
            .iter()
            .flat_map(|m| m.iter().zip(&self.rule.weights))
            .map(|(v, &w)| w * v.im * v.im)
            .sum::<f64>()
            .max(0.0)
            .sqrt()
    }

    fn compatible_with(&self, other: &Self) -> bool {
        self.modes.len() == other.modes.len()
            && self.rule.len() == other.rule.len()
            && self.rule.interval == other.rule.interval
    }
}

/// A wave packet synthesized on an explicit spatial grid of the strip,
/// one coefficient function per transverse mode.
#[derive(Debug, Clone)]
pub struct StripGridFunction {
    pub x_grid: Vec<f64>,
    /// `coefficients[n-1][j]` is the mode-n coefficient at `x_grid[j]`.
    pub coefficients: Vec<Vec<Complex64>>,
}

impl StripGridFunction {
    /// Physical field value `u(x, y)` reassembled from the transverse modes.
    pub fn value_at(&self, xi: usize, y: f64) -> Complex64 {
        let mut sum = Complex64::default();
        for (idx, coeffs) in self.coefficients.iter().enumerate() {
            let n = idx + 1;
            let arg = n as f64 * std::f64::consts::FRAC_PI_2 * y;
            let mode = if n % 2 == 1 { arg.cos() } else { arg.sin() };
            sum += coeffs[xi] * mode;
        }
        sum
    }
}
