//! Analytic reference spectral densities for the operator gallery, plus the
//! kernel-convolution oracle used to cross-check resolvent-path results.

use crate::error::MeasureError;
use crate::kernels::RationalKernel;
use crate::numerics::cubic::cubic_roots_in_interval;
use crate::numerics::integrate_adaptive;
use crate::operators::strip::transverse_eigenvalue;
use crate::CUBIC_SPECTRAL_EDGE;
use std::f64::consts::PI;

const SINGULAR_TOL: f64 = 1e-12;

/// A scalar spectral density with its singular set and domain of validity.
///
/// `evaluate` must be finite on the valid interval away from the singular
/// points; infinite endpoints mark densities that extend over the whole line
/// (or half-line) rather than being compactly supported.
pub struct DensityFunction {
    pub evaluate: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub singular_points: Vec<f64>,
    pub valid_interval: (f64, f64),
}

fn cubic_derivative(x: f64) -> f64 {
    3.0 * x * x - 1.0
}

fn rho_multiplication_unguarded(
    f: &dyn Fn(f64) -> f64,
    g: &dyn Fn(f64) -> f64,
    lambda: f64,
) -> f64 {
    cubic_roots_in_interval(lambda, (-1.0, 1.0))
        .iter()
        .filter(|r| r.multiplicity == 1)
        .map(|r| f(r.x) * g(r.x) / cubic_derivative(r.x).abs())
        .sum()
}

/// Spectral density of the cubic multiplication operator with respect to the
/// pair (f, g): the sum of f g / |p'| over the interior preimages of lambda.
pub fn rho_multiplication(
    f: &dyn Fn(f64) -> f64,
    g: &dyn Fn(f64) -> f64,
    lambda: f64,
) -> Result<f64, MeasureError> {
    for s in [-CUBIC_SPECTRAL_EDGE, 0.0, CUBIC_SPECTRAL_EDGE] {
        if (lambda - s).abs() <= SINGULAR_TOL {
            return Err(MeasureError::SingularPoint(s));
        }
    }
    Ok(rho_multiplication_unguarded(f, g, lambda))
}

/// Spectral density of the free 1D Laplacian with respect to (f, g), given
/// their real-valued Fourier transforms. Zero below the spectrum.
pub fn rho_free_laplacian(
    f_hat: &dyn Fn(f64) -> f64,
    g_hat: &dyn Fn(f64) -> f64,
    lambda: f64,
) -> Result<f64, MeasureError> {
    if lambda.abs() <= SINGULAR_TOL {
        return Err(MeasureError::SingularPoint(0.0));
    }
    if lambda < 0.0 {
        return Ok(0.0);
    }
    let k = lambda.sqrt() / (2.0 * PI);
    Ok((f_hat(k) * g_hat(k) + f_hat(-k) * g_hat(-k)) / (4.0 * PI * lambda.sqrt()))
}

/// Spectral density of the strip Laplacian: per-mode free-Laplacian densities
/// shifted by the transverse eigenvalues, summed over the active modes.
pub fn rho_strip(
    f_hat_modes: &[&dyn Fn(f64) -> f64],
    lambda: f64,
) -> Result<f64, MeasureError> {
    let mut sum = 0.0;
    for (idx, f_hat) in f_hat_modes.iter().enumerate() {
        let threshold = transverse_eigenvalue(idx + 1);
        let shifted = lambda - threshold;
        if shifted.abs() <= SINGULAR_TOL {
            return Err(MeasureError::SingularPoint(threshold));
        }
        if shifted < 0.0 {
            continue;
        }
        let k = shifted.sqrt() / (2.0 * PI);
        let fp = f_hat(k);
        let fm = f_hat(-k);
        sum += (fp * fp + fm * fm) / (4.0 * PI * shifted.sqrt());
    }
    Ok(sum)
}

/// Density of the cubic multiplication operator packaged for convolution.
pub fn multiplication_density(
    f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    g: impl Fn(f64) -> f64 + Send + Sync + 'static,
) -> DensityFunction {
    DensityFunction {
        evaluate: Box::new(move |lambda| rho_multiplication_unguarded(&f, &g, lambda)),
        singular_points: vec![-CUBIC_SPECTRAL_EDGE, 0.0, CUBIC_SPECTRAL_EDGE],
        valid_interval: (-CUBIC_SPECTRAL_EDGE, CUBIC_SPECTRAL_EDGE),
    }
}

/// Density of the free Laplacian packaged for convolution.
pub fn free_laplacian_density(
    f_hat: impl Fn(f64) -> f64 + Send + Sync + 'static,
    g_hat: impl Fn(f64) -> f64 + Send + Sync + 'static,
) -> DensityFunction {
    DensityFunction {
        evaluate: Box::new(move |lambda| {
            if lambda <= 0.0 {
                return 0.0;
            }
            let k = lambda.sqrt() / (2.0 * PI);
            (f_hat(k) * g_hat(k) + f_hat(-k) * g_hat(-k)) / (4.0 * PI * lambda.sqrt())
        }),
        singular_points: vec![0.0],
        valid_interval: (0.0, f64::INFINITY),
    }
}

/// Strip-Laplacian density packaged for convolution, truncated at the number
/// of supplied mode transforms.
pub fn strip_density(f_hat_modes: Vec<Box<dyn Fn(f64) -> f64 + Send + Sync>>) -> DensityFunction {
    let n_modes = f_hat_modes.len();
    DensityFunction {
        evaluate: Box::new(move |lambda| {
            let mut sum = 0.0;
            for (idx, f_hat) in f_hat_modes.iter().enumerate() {
                let shifted = lambda - transverse_eigenvalue(idx + 1);
                if shifted <= 0.0 {
                    continue;
                }
                let k = shifted.sqrt() / (2.0 * PI);
                let fp = f_hat(k);
                let fm = f_hat(-k);
                sum += (fp * fp + fm * fm) / (4.0 * PI * shifted.sqrt());
            }
            sum
        }),
        singular_points: (1..=n_modes).map(transverse_eigenvalue).collect(),
        valid_interval: (transverse_eigenvalue(1), f64::INFINITY),
    }
}

/// Constant density on the whole line; synthetic, for normalization checks.
pub fn constant_density(value: f64) -> DensityFunction {
    DensityFunction {
        evaluate: Box::new(move |_| value),
        singular_points: Vec::new(),
        valid_interval: (f64::NEG_INFINITY, f64::INFINITY),
    }
}

/// Direct convolution `[K_eps * rho](lambda)` by adaptive quadrature.
///
/// This is the independent oracle against which resolvent-path smoothed
/// densities are checked: it never touches an operator, only the analytic
/// density and the kernel. Panels are seeded on a dyadic ladder around
/// lambda and split at the density's singular points; where the integration
/// window is truncated inside the valid interval, the kernel's closed-form
/// tail masses weighted by the boundary density are added back.
pub fn smoothed_density_oracle(
    density: &DensityFunction,
    kernel: &RationalKernel,
    eps: f64,
    lambda: f64,
) -> f64 {
    let window = 1e6 * eps;
    let lo = (lambda - window).max(density.valid_interval.0);
    let hi = (lambda + window).min(density.valid_interval.1);
    if !(lo < hi) {
        return 0.0;
    }

    let mut seeds: Vec<f64> = density.singular_points.clone();
    if lambda > lo && lambda < hi {
        seeds.push(lambda);
    }
    let mut offset = eps;
    while offset < window {
        seeds.push(lambda - offset);
        seeds.push(lambda + offset);
        offset *= 2.0;
    }

    let rho = &density.evaluate;
    let mut value = integrate_adaptive(
        |mu| kernel.eval((lambda - mu) / eps) / eps * rho(mu),
        lo,
        hi,
        1e-11,
        &seeds,
    );
    if lo > density.valid_interval.0 {
        value += rho(lo) * kernel.mass_above((lambda - lo) / eps);
    }
    if hi < density.valid_interval.1 {
        value += rho(hi) * kernel.mass_below((lambda - hi) / eps);
    }
    value
}
