//! Real roots of the cubic family x^3 - x - lambda inside an interval.

/// A real root of `x^3 - x - lambda` with its multiplicity.
///
/// Multiplicity 2 marks the degenerate double root that appears when lambda
/// sits at a critical value of `p(x) = x^3 - x`; the density formulas divide
/// by `p'` which vanishes there, so callers need the flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicRoot {
    pub x: f64,
    pub multiplicity: u8,
}

fn p(x: f64) -> f64 {
    x * x * x - x
}

fn dp(x: f64) -> f64 {
    3.0 * x * x - 1.0
}

/// All real roots of `x^3 - x = lambda` strictly inside the open interval,
/// sorted ascending. Double roots (lambda within 1e-12 of the critical values
/// of `p`) are reported once with `multiplicity = 2`. Boundary roots are
/// excluded; an empty result is valid.
pub fn cubic_roots_in_interval(lambda: f64, interval: (f64, f64)) -> Vec<CubicRoot> {
    let (a, b) = interval;
    if !(a < b) {
        return Vec::new();
    }
    let g = |x: f64| p(x) - lambda;
    let crit = 1.0 / 3.0_f64.sqrt();
    let double_tol = 1e-12 * lambda.abs().max(1.0);

    let mut roots: Vec<CubicRoot> = Vec::new();
    let mut edges = vec![a];
    for xc in [-crit, crit] {
        if xc > a && xc < b {
            edges.push(xc);
        }
    }
    edges.push(b);

    // Degenerate case: lambda at a critical value of p gives a double root
    // exactly at the critical point.
    let mut double_at: Option<f64> = None;
    for &xc in &edges[1..edges.len() - 1] {
        if g(xc).abs() <= double_tol {
            roots.push(CubicRoot {
                x: xc,
                multiplicity: 2,
            });
            double_at = Some(xc);
        }
    }

    for pair in edges.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        if double_at.is_some_and(|xd| xd == lo || xd == hi) {
            continue;
        }
        let (glo, ghi) = (g(lo), g(hi));
        if glo == 0.0 || ghi == 0.0 || glo.signum() == ghi.signum() {
            continue;
        }
        let mut x = bisect(g, lo, hi);
        // Newton polish while it improves the residual; p is monotone here so
        // a couple of steps reach roundoff level.
        for _ in 0..3 {
            let gx = g(x);
            let d = dp(x);
            if d == 0.0 {
                break;
            }
            let next = x - gx / d;
            if next > lo && next < hi && g(next).abs() <= gx.abs() {
                x = next;
            } else {
                break;
            }
        }
        if x > a && x < b {
            roots.push(CubicRoot {
                x,
                multiplicity: 1,
            });
        }
    }
    roots.sort_by(|r, s| r.x.partial_cmp(&s.x).unwrap());
    roots
}

fn bisect(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut glo = g(lo);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let gmid = g(mid);
        if gmid == 0.0 {
            return mid;
        }
        if glo.signum() == gmid.signum() {
            lo = mid;
            glo = gmid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent bracketed bisection to 1e-13, used as the root oracle.
    fn bisection_oracle(lambda: f64, lo: f64, hi: f64) -> Option<f64> {
        let g = |x: f64| x * x * x - x - lambda;
        let (mut lo, mut hi) = (lo, hi);
        let (mut glo, ghi) = (g(lo), g(hi));
        if glo == 0.0 || ghi == 0.0 || glo.signum() == ghi.signum() {
            return None;
        }
        while hi - lo > 1e-13 {
            let mid = 0.5 * (lo + hi);
            let gmid = g(mid);
            if glo.signum() == gmid.signum() {
                lo = mid;
                glo = gmid;
            } else {
                hi = mid;
            }
        }
        Some(0.5 * (lo + hi))
    }

    const SPECTRAL_EDGE: f64 = 0.384_900_179_459_750_5; // 2*sqrt(3)/9

    #[test]
    fn lambda_zero_keeps_only_interior_root() {
        let roots = cubic_roots_in_interval(0.0, (-1.0, 1.0));
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].x, 0.0);
        assert_eq!(roots[0].multiplicity, 1);
    }

    #[test]
    fn critical_lambda_reports_double_root_once() {
        // p'(+-1/sqrt(3)) = 0 and p(-1/sqrt(3)) = 2*sqrt(3)/9, so at that
        // lambda the only root inside (-1, 1) is the double root at -1/sqrt(3);
        // the remaining simple root 2/sqrt(3) lies outside the interval.
        let roots = cubic_roots_in_interval(SPECTRAL_EDGE, (-1.0, 1.0));
        assert_eq!(roots.len(), 1, "roots: {roots:?}");
        assert!((roots[0].x + 1.0 / 3.0_f64.sqrt()).abs() < 1e-9);
        assert_eq!(roots[0].multiplicity, 2);

        // Widening the interval picks up the outside simple root as well.
        let wide = cubic_roots_in_interval(SPECTRAL_EDGE, (-2.0, 2.0));
        assert_eq!(wide.len(), 2);
        assert_eq!(wide[0].multiplicity, 2);
        assert!((wide[1].x - 2.0 / 3.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn lambda_tenth_matches_bisection_oracle() {
        let lambda = 0.1;
        let roots = cubic_roots_in_interval(lambda, (-2.0, 2.0));
        assert_eq!(roots.len(), 3);
        let crit = 1.0 / 3.0_f64.sqrt();
        let brackets = [(-2.0, -crit), (-crit, crit), (crit, 2.0)];
        for (root, (lo, hi)) in roots.iter().zip(brackets) {
            let expected = bisection_oracle(lambda, lo, hi).unwrap();
            assert!(
                (root.x - expected).abs() < 1e-12,
                "root {} vs oracle {expected}",
                root.x
            );
            assert!((root.x.powi(3) - root.x - lambda).abs() < 1e-13);
        }
    }

    #[test]
    fn root_counts_over_spectral_interval() {
        // Over a bracket containing all real roots: three roots inside the
        // open spectral interval, one root outside it.
        let mut state = 0x243f6a8885a308d3u64;
        let mut next = || {
            // xorshift; deterministic and seedless
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..1000 {
            let lambda = (2.0 * next() - 1.0) * SPECTRAL_EDGE * 0.999_999;
            let n: u8 = cubic_roots_in_interval(lambda, (-2.0, 2.0))
                .iter()
                .map(|r| r.multiplicity)
                .sum();
            assert_eq!(n, 3, "lambda={lambda}");
        }
        for _ in 0..1000 {
            let lambda = (SPECTRAL_EDGE + 1e-6 + next()) * if next() > 0.5 { 1.0 } else { -1.0 };
            let roots = cubic_roots_in_interval(lambda, (-3.0, 3.0));
            assert_eq!(roots.len(), 1, "lambda={lambda}");
        }
    }

    #[test]
    fn interior_root_count_in_unit_interval_is_two_off_axis() {
        // Inside (-1, 1) the cubic has exactly two preimages for regular
        // lambda in the spectrum, matching the two inverse branches.
        for lambda in [0.05, 0.1, 0.3, -0.05, -0.2, -0.35] {
            let roots = cubic_roots_in_interval(lambda, (-1.0, 1.0));
            assert_eq!(roots.len(), 2, "lambda={lambda}");
        }
    }

    #[test]
    fn residuals_below_1e13() {
        for lambda in [0.01, 0.2, 0.38, -0.1, -0.384] {
            for root in cubic_roots_in_interval(lambda, (-1.0, 1.0)) {
                assert!((root.x.powi(3) - root.x - lambda).abs() < 1e-13);
            }
        }
    }
}
