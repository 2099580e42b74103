//! Wave-packet assembly from shifted resolvent solves, weak pairings,
//! smoothed spectral densities, pointwise comparisons, and error sweeps.
//!
//! For a kernel with poles `a_k` and residues `alpha_k`, the packet at
//! spectral parameter lambda is
//!
//! `u = (1/2 pi i) sum_k [ conj(alpha_k) R(lambda - eps conj(a_k))
//!                        - alpha_k      R(lambda - eps a_k) ] f`
//!
//! which equals the kernel-smoothed spectral projection
//! `integral K_eps(lambda - mu) dE(mu) f` by the functional calculus. The
//! single-pole case is Stone's formula with the Poisson kernel.

use crate::error::{CoreError, KernelError, NumericsError};
use crate::grid::SpectralVector;
use crate::kernels::RationalKernel;
use crate::operators::ResolventOracle;
use num_complex::Complex64;
use std::f64::consts::PI;

/// A smoothed spectral projection concentrated at `lambda` with bandwidth
/// `eps`, assembled from a kernel of the stored order.
#[derive(Debug, Clone)]
pub struct WavePacket<V> {
    pub lambda: f64,
    pub eps: f64,
    pub kernel_order: usize,
    pub values: V,
}

/// Assembly options.
#[derive(Debug, Clone)]
pub struct AssembleOptions {
    /// Share one solve per conjugate pole pair when the operator and the
    /// input are real (m solves instead of 2m). Disable for complex inputs
    /// or to cross-check the reduction.
    pub exploit_conjugate_symmetry: bool,
}

impl Default for AssembleOptions {
    fn default() -> Self {
        Self {
            exploit_conjugate_symmetry: true,
        }
    }
}

/// Assembles the wave packet at (lambda, eps) from resolvent applications.
pub fn assemble<O: ResolventOracle>(
    oracle: &O,
    kernel: &RationalKernel,
    eps: f64,
    lambda: f64,
    f: &O::Vector,
    options: &AssembleOptions,
) -> Result<WavePacket<O::Vector>, CoreError> {
    if !(eps > 0.0) {
        return Err(KernelError::NonpositiveEpsilon(eps).into());
    }
    let f_is_real = f.imag_norm() <= 1e-14 * f.norm().max(1e-300);
    let share_solves =
        options.exploit_conjugate_symmetry && oracle.is_real() && f_is_real;
    let prefactor = Complex64::new(0.0, -1.0 / (2.0 * PI)); // 1/(2 pi i)

    let mut u = f.zeros_like();
    for (a, alpha) in kernel.poles().iter().zip(kernel.residues()) {
        let z_lower = Complex64::new(lambda, 0.0) - eps * a;
        let w_lower = oracle.apply(z_lower, f)?;
        let w_upper = if share_solves {
            w_lower.conjugate()
        } else {
            let z_upper = Complex64::new(lambda, 0.0) - eps * a.conj();
            oracle.apply(z_upper, f)?
        };
        u.add_scaled(prefactor * alpha.conj(), &w_upper)?;
        u.add_scaled(-prefactor * alpha, &w_lower)?;
    }
    Ok(WavePacket {
        lambda,
        eps,
        kernel_order: kernel.order(),
        values: u,
    })
}

/// Quadrature pairing `<u, phi>`, conjugate linear in the test function.
pub fn weak_pairing<V: SpectralVector>(
    packet: &WavePacket<V>,
    phi: &V,
) -> Result<Complex64, CoreError> {
    Ok(packet.values.inner(phi)?)
}

/// Smoothed spectral density `<u_lambda^(eps), f>`, the kernel-smoothed
/// Radon-Nikodym derivative of the spectral measure of f at lambda.
pub fn smoothed_density<O: ResolventOracle>(
    oracle: &O,
    kernel: &RationalKernel,
    eps: f64,
    lambda: f64,
    f: &O::Vector,
    options: &AssembleOptions,
) -> Result<f64, CoreError> {
    let packet = assemble(oracle, kernel, eps, lambda, f, options)?;
    let value = weak_pairing(&packet, f)?;
    let scale = value.re.abs().max(1e-14 * f.norm().powi(2));
    assert!(
        value.im.abs() <= 1e-10 * scale.max(1e-300),
        "self-pairing of a real measure came out complex: {value}"
    );
    Ok(value.re)
}

/// A reference generalized eigenfunction in the density-weighted
/// normalization: the pointwise limit of the wave packets as eps -> 0.
pub struct ReferenceEigenfunction {
    pub evaluate: Box<dyn Fn(f64) -> Complex64 + Send + Sync>,
}

/// The free-Laplacian limit profile for a real even input with transform
/// `f_hat`: a density-weighted cosine at frequency sqrt(lambda).
pub fn free_laplacian_reference(
    f_hat: impl Fn(f64) -> f64 + Send + Sync + 'static,
    lambda: f64,
) -> ReferenceEigenfunction {
    ReferenceEigenfunction {
        evaluate: Box::new(move |x| {
            let root = lambda.sqrt();
            let k = root / (2.0 * PI);
            let forward = Complex64::from_polar(1.0, root * x);
            let backward = Complex64::from_polar(1.0, -root * x);
            (f_hat(k) * forward + f_hat(-k) * backward) / (4.0 * PI * root)
        }),
    }
}

/// Sup-norm error of packet samples against a reference on a window.
#[derive(Debug, Clone, Copy)]
pub struct SupError {
    pub absolute: f64,
    /// Absolute error divided by the max reference magnitude on the window.
    pub relative: f64,
}

/// Maximum pointwise error over the sample points that fall in the window.
pub fn sup_error(
    xs: &[f64],
    u_values: &[Complex64],
    reference: &ReferenceEigenfunction,
    window: (f64, f64),
) -> Result<SupError, CoreError> {
    let mut worst = 0.0_f64;
    let mut ref_peak = 0.0_f64;
    let mut count = 0usize;
    for (&x, u) in xs.iter().zip(u_values) {
        if x < window.0 || x > window.1 {
            continue;
        }
        count += 1;
        let r = (reference.evaluate)(x);
        worst = worst.max((u - r).norm());
        ref_peak = ref_peak.max(r.norm());
    }
    if count == 0 {
        return Err(CoreError::EmptyWindow(window.0, window.1));
    }
    Ok(SupError {
        absolute: worst,
        relative: worst / ref_peak,
    })
}

/// One (eps, error) sample of a convergence sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepPoint {
    pub eps: f64,
    pub error: f64,
}

/// Errors against a reference over an eps grid, with the fitted log-log slope.
#[derive(Debug, Clone)]
pub struct ErrorSweep {
    pub kernel_order: usize,
    pub points: Vec<SweepPoint>,
    pub slope: f64,
}

impl ErrorSweep {
    /// Slope refitted over the sub-range `eps <= cutoff`; sweeps that span
    /// both the pre-asymptotic plateau and the asymptotic regime need this
    /// to read off the limiting order.
    pub fn slope_below(&self, cutoff: f64) -> Result<f64, NumericsError> {
        let pts: Vec<(f64, f64)> = self
            .points
            .iter()
            .filter(|p| p.eps <= cutoff)
            .map(|p| (p.eps, p.error))
            .collect();
        crate::numerics::fit_loglog_slope(&pts)
    }
}

/// The default log-spaced eps grid 10^(-j/4) covering [1e-3, 1], descending.
pub fn default_eps_grid() -> Vec<f64> {
    (0..=12).map(|j| 10f64.powf(-0.25 * j as f64)).collect()
}

/// Runs `error_at(order, eps)` over the grid for every kernel order and fits
/// per-order slopes. The eps list must hold at least four positive values
/// spanning one and a half decades.
pub fn error_sweep(
    kernel_orders: &[usize],
    eps_list: &[f64],
    mut error_at: impl FnMut(usize, f64) -> Result<f64, CoreError>,
) -> Result<Vec<ErrorSweep>, CoreError> {
    if eps_list.len() < 4 {
        return Err(NumericsError::InsufficientData {
            needed: 4,
            got: eps_list.len(),
        }
        .into());
    }
    if let Some(idx) = eps_list.iter().position(|&e| !(e > 0.0)) {
        return Err(NumericsError::NonpositiveValue(idx).into());
    }
    let max = eps_list.iter().cloned().fold(f64::MIN, f64::max);
    let min = eps_list.iter().cloned().fold(f64::MAX, f64::min);
    if max / min < 10f64.powf(1.5) * 0.999 {
        return Err(NumericsError::InsufficientData {
            needed: 4,
            got: eps_list.len(),
        }
        .into());
    }
    let mut sweeps = Vec::with_capacity(kernel_orders.len());
    for &order in kernel_orders {
        let mut points = Vec::with_capacity(eps_list.len());
        for &eps in eps_list {
            let error = error_at(order, eps)?;
            points.push(SweepPoint { eps, error });
        }
        let slope = crate::numerics::fit_loglog_slope(
            &points.iter().map(|p| (p.eps, p.error)).collect::<Vec<_>>(),
        )?;
        sweeps.push(ErrorSweep {
            kernel_order: order,
            points,
            slope,
        });
    }
    Ok(sweeps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridFunction;
    use crate::kernels::{build_kernel, equispaced_poles};
    use crate::measures::{multiplication_density, rho_multiplication, smoothed_density_oracle};
    use crate::numerics::cubic::cubic_roots_in_interval;
    use crate::numerics::quadrature::gauss_legendre;
    use crate::operators::free_laplacian::{free_laplacian_resolvent, gaussian_transform};
    use crate::operators::multiplication::{
        multiplication_resolvent, multiplication_resolvent_with_rule,
    };

    fn cubic_f(x: f64) -> f64 {
        (2.0 + x) * (2.0 * PI * x).cos()
    }

    fn no_sharing() -> AssembleOptions {
        AssembleOptions {
            exploit_conjugate_symmetry: false,
        }
    }

    #[test]
    fn first_order_packet_is_the_stone_difference() {
        let oracle = multiplication_resolvent_with_rule(gauss_legendre(400, -1.0, 1.0).unwrap());
        let kernel = build_kernel(&equispaced_poles(1)).unwrap();
        let f = oracle.lift(cubic_f);
        let (lambda, eps) = (0.1, 0.05);
        let packet = assemble(&oracle, &kernel, eps, lambda, &f, &Default::default()).unwrap();

        // two-point Stone difference: (1/2 pi i)[R(lambda + i eps) - R(lambda - i eps)] f
        let plus = oracle
            .apply(Complex64::new(lambda, eps), &f)
            .unwrap();
        let minus = oracle
            .apply(Complex64::new(lambda, -eps), &f)
            .unwrap();
        let pref = Complex64::new(0.0, -1.0 / (2.0 * PI));
        let mut stone = plus.zeros_like();
        stone.add_scaled(pref, &plus).unwrap();
        stone.add_scaled(-pref, &minus).unwrap();

        let mut diff = packet.values.clone();
        diff.add_scaled(Complex64::new(-1.0, 0.0), &stone).unwrap();
        assert!(diff.norm() <= 1e-13 * stone.norm());

        // and it is the positive Poisson average: self-pairing positive
        let density = weak_pairing(&packet, &f).unwrap();
        assert!(density.re > 0.0);
    }

    #[test]
    fn shared_and_unshared_solves_agree() {
        let oracle = multiplication_resolvent_with_rule(gauss_legendre(300, -1.0, 1.0).unwrap());
        let f = oracle.lift(cubic_f);
        for m in [1usize, 2, 3, 5] {
            let kernel = build_kernel(&equispaced_poles(m)).unwrap();
            let fast = assemble(&oracle, &kernel, 0.05, 0.1, &f, &Default::default()).unwrap();
            let slow = assemble(&oracle, &kernel, 0.05, 0.1, &f, &no_sharing()).unwrap();
            let mut diff = fast.values.clone();
            diff.add_scaled(Complex64::new(-1.0, 0.0), &slow.values)
                .unwrap();
            assert!(diff.norm() <= 1e-13 * slow.values.norm().max(1e-300), "m={m}");
        }
    }

    #[test]
    fn packet_is_real_for_real_data() {
        let oracle = multiplication_resolvent_with_rule(gauss_legendre(300, -1.0, 1.0).unwrap());
        let f = oracle.lift(cubic_f);
        for m in [1usize, 3, 4] {
            let kernel = build_kernel(&equispaced_poles(m)).unwrap();
            let packet = assemble(&oracle, &kernel, 0.02, 0.1, &f, &no_sharing()).unwrap();
            assert!(
                packet.values.imag_norm() <= 1e-10 * packet.values.norm(),
                "m={m}"
            );
        }
    }

    #[test]
    fn packet_peaks_at_cubic_roots() {
        let oracle = multiplication_resolvent();
        let kernel = build_kernel(&equispaced_poles(1)).unwrap();
        let f = oracle.lift(cubic_f);
        let lambda = 0.1;
        let packet = assemble(&oracle, &kernel, 0.01, lambda, &f, &Default::default()).unwrap();
        let nodes = &oracle.rule().nodes;
        let mags: Vec<f64> = packet.values.values.iter().map(|v| v.norm()).collect();

        for root in cubic_roots_in_interval(lambda, (-1.0, 1.0)) {
            let center = nodes
                .partition_point(|&x| x < root.x)
                .min(nodes.len() - 2);
            // local argmax within a handful of grid spacings of the root
            let lo = center.saturating_sub(40);
            let hi = (center + 40).min(nodes.len() - 1);
            let arg = (lo..=hi).max_by(|&i, &j| mags[i].total_cmp(&mags[j])).unwrap();
            let spacing = nodes[center + 1] - nodes[center];
            assert!(
                (nodes[arg] - root.x).abs() <= 2.0 * spacing + 1e-12,
                "peak at {} vs root {} (spacing {spacing})",
                nodes[arg],
                root.x
            );
        }
    }

    #[test]
    fn weak_pairing_is_linear_in_phi() {
        let oracle = multiplication_resolvent_with_rule(gauss_legendre(200, -1.0, 1.0).unwrap());
        let kernel = build_kernel(&equispaced_poles(2)).unwrap();
        let f = oracle.lift(cubic_f);
        let packet = assemble(&oracle, &kernel, 0.05, 0.05, &f, &Default::default()).unwrap();
        let phi1 = oracle.lift(|x| (PI * x).cos());
        let phi2 = oracle.lift(|x| x * x);
        let c1 = Complex64::new(0.7, -0.1);
        let c2 = Complex64::new(-0.2, 0.4);
        let mut combo = phi1.zeros_like();
        combo.add_scaled(c1, &phi1).unwrap();
        combo.add_scaled(c2, &phi2).unwrap();
        let lhs = weak_pairing(&packet, &combo).unwrap();
        let rhs = c1.conj() * weak_pairing(&packet, &phi1).unwrap()
            + c2.conj() * weak_pairing(&packet, &phi2).unwrap();
        assert!((lhs - rhs).norm() < 1e-13 * lhs.norm().max(1.0));
    }

    #[test]
    fn pairing_equals_per_pole_combination() {
        // linearity: pairing the assembled packet equals combining the
        // per-shift pairings directly
        let oracle = multiplication_resolvent_with_rule(gauss_legendre(250, -1.0, 1.0).unwrap());
        let kernel = build_kernel(&equispaced_poles(3)).unwrap();
        let f = oracle.lift(cubic_f);
        let phi = oracle.lift(|x| (1.0 + x) * (PI * x).cos());
        let (lambda, eps) = (0.07, 0.03);
        let packet = assemble(&oracle, &kernel, eps, lambda, &f, &no_sharing()).unwrap();
        let assembled = weak_pairing(&packet, &phi).unwrap();

        let pref = Complex64::new(0.0, -1.0 / (2.0 * PI));
        let mut direct = Complex64::default();
        for (a, alpha) in kernel.poles().iter().zip(kernel.residues()) {
            let w_up = oracle
                .apply(Complex64::new(lambda, 0.0) - eps * a.conj(), &f)
                .unwrap();
            let w_dn = oracle
                .apply(Complex64::new(lambda, 0.0) - eps * a, &f)
                .unwrap();
            direct += pref * alpha.conj() * w_up.inner(&phi).unwrap();
            direct -= pref * alpha * w_dn.inner(&phi).unwrap();
        }
        assert!((assembled - direct).norm() <= 1e-13 * direct.norm());
    }

    #[test]
    fn smoothed_density_matches_convolution_oracle() {
        let oracle = multiplication_resolvent();
        let kernel = build_kernel(&equispaced_poles(1)).unwrap();
        let f = oracle.lift(cubic_f);
        let density = multiplication_density(cubic_f, cubic_f);
        let (lambda, eps) = (0.1, 0.01);
        let resolvent_path =
            smoothed_density(&oracle, &kernel, eps, lambda, &f, &Default::default()).unwrap();
        let convolution_path = smoothed_density_oracle(&density, &kernel, eps, lambda);
        assert!(
            (resolvent_path - convolution_path).abs() < 1e-7,
            "{resolvent_path} vs {convolution_path}"
        );
    }

    #[test]
    fn free_laplacian_packet_approaches_reference() {
        let oracle = free_laplacian_resolvent(8.0, 65536).unwrap();
        let f = oracle.lift_transform(gaussian_transform).unwrap();
        let kernel = build_kernel(&equispaced_poles(3)).unwrap();
        let lambda = 1.0;
        let packet = assemble(&oracle, &kernel, 0.01, lambda, &f, &Default::default()).unwrap();
        let xs: Vec<f64> = (0..=400).map(|i| -10.0 + 0.05 * i as f64).collect();
        let u = oracle.synthesize(&packet.values, &xs);
        let reference = free_laplacian_reference(|k| (-PI * k * k).exp(), lambda);
        let err = sup_error(&xs, &u, &reference, (-10.0, 10.0)).unwrap();
        assert!(err.relative < 0.05, "relative sup error {}", err.relative);

        // the x = 0 limit value has the closed form fhat(1/(2 pi)) / (2 pi)
        let u0 = oracle.synthesize(&packet.values, &[0.0])[0];
        let limit = (-(1.0 / (4.0 * PI))).exp() / (2.0 * PI);
        assert!((u0.re - limit).abs() / limit < 1e-4, "{u0} vs {limit}");
    }

    #[test]
    fn sup_error_reference_equals_self_is_zero() {
        let reference = ReferenceEigenfunction {
            evaluate: Box::new(|x| Complex64::new(x.cos(), 0.0)),
        };
        let xs: Vec<f64> = (0..100).map(|i| -5.0 + 0.1 * i as f64).collect();
        let u: Vec<Complex64> = xs.iter().map(|&x| Complex64::new(x.cos(), 0.0)).collect();
        let err = sup_error(&xs, &u, &reference, (-5.0, 5.0)).unwrap();
        assert_eq!(err.absolute, 0.0);

        assert!(matches!(
            sup_error(&xs, &u, &reference, (40.0, 50.0)),
            Err(CoreError::EmptyWindow(_, _))
        ));
    }

    #[test]
    fn sweep_validation() {
        let ok = |_m: usize, eps: f64| Ok(eps);
        assert!(error_sweep(&[1], &[0.1, 0.01], |m, e| ok(m, e)).is_err());
        assert!(error_sweep(&[1], &[0.5, 0.4, 0.3, 0.2], |m, e| ok(m, e)).is_err());
        let sweeps =
            error_sweep(&[1], &[1.0, 0.1, 0.01, 0.001], |m, e| ok(m, e)).unwrap();
        assert!((sweeps[0].slope - 1.0).abs() < 1e-12);
    }

    #[test]
    fn weak_error_slope_in_smooth_region() {
        // away from the singular set the weak error drops at the kernel order
        // (up to the log factor); composite grid keeps the smallest eps resolved
        let oracle = multiplication_resolvent_with_rule(
            crate::numerics::quadrature::composite_gauss_legendre(4000, 12, -1.0, 1.0).unwrap(),
        );
        let f = oracle.lift(cubic_f);
        let phi = oracle.lift(|x| (1.0 + x) * (PI * x).cos());
        let lambda = 0.2;
        let exact = rho_multiplication(
            &cubic_f,
            &|x| (1.0 + x) * (PI * x).cos(),
            lambda,
        )
        .unwrap();
        let eps_list: Vec<f64> = (0..=6)
            .map(|j| 0.05 * 10f64.powf(-0.25 * j as f64))
            .collect();
        let sweeps = error_sweep(&[2], &eps_list, |m, eps| {
            let kernel = build_kernel(&equispaced_poles(m)).unwrap();
            let packet = assemble(&oracle, &kernel, eps, lambda, &f, &Default::default())?;
            let pairing = weak_pairing(&packet, &phi)?;
            Ok((pairing.re - exact).abs() / exact.abs())
        })
        .unwrap();
        assert!(
            sweeps[0].slope >= 2.0 - 0.4,
            "slope {} points {:?}",
            sweeps[0].slope,
            sweeps[0].points
        );
    }
}
