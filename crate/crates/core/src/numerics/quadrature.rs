//! Gauss–Legendre rules, uniform trapezoid grids, and an adaptive panel integrator.

use crate::error::NumericsError;
use std::sync::OnceLock;

/// Nodes and positive weights for numerical integration on an interval.
///
/// Gauss-type constructors keep every node strictly inside the interval;
/// the uniform trapezoid constructor places nodes at the endpoints and is
/// used as the grid descriptor for line and strip domains.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub interval: (f64, f64),
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrates a real-valued function with this rule.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Legendre polynomial value and derivative at `x` by three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Gauss–Legendre rule with `n` nodes on `(a, b)`.
///
/// Exact for polynomials of degree up to `2n - 1`. Nodes are found by Newton
/// iteration from the Tricomi initial guess; the node set is symmetrized so
/// rules on symmetric intervals are exactly reflection-invariant.
pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Result<QuadratureRule, NumericsError> {
    if !(a < b) {
        return Err(NumericsError::InvalidInterval(a, b));
    }
    if n == 0 {
        return Err(NumericsError::InsufficientData { needed: 1, got: 0 });
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pair(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x from the cosine guess is the (i+1)-th largest root
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
    if n % 2 == 1 {
        let mid = n / 2;
        nodes[mid] = 0.0;
        let (_, dp) = legendre_pair(n, 0.0);
        weights[mid] = 2.0 / (dp * dp);
    }
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);
    for i in 0..n {
        nodes[i] = center + half * nodes[i];
        weights[i] *= half;
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        interval: (a, b),
    })
}

/// Composite Gauss–Legendre rule: `panels` equal panels with `per_panel` nodes each.
///
/// Trades polynomial exactness for uniform resolution; used for operator grids
/// that must resolve near-pole integrands at small smoothing parameters.
pub fn composite_gauss_legendre(
    panels: usize,
    per_panel: usize,
    a: f64,
    b: f64,
) -> Result<QuadratureRule, NumericsError> {
    if !(a < b) {
        return Err(NumericsError::InvalidInterval(a, b));
    }
    if panels == 0 || per_panel == 0 {
        return Err(NumericsError::InsufficientData { needed: 1, got: 0 });
    }
    let base = gauss_legendre(per_panel, 0.0, 1.0)?;
    let h = (b - a) / panels as f64;
    let mut nodes = Vec::with_capacity(panels * per_panel);
    let mut weights = Vec::with_capacity(panels * per_panel);
    for p in 0..panels {
        let lo = a + p as f64 * h;
        for (&t, &w) in base.nodes.iter().zip(&base.weights) {
            nodes.push(lo + t * h);
            weights.push(w * h);
        }
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        interval: (a, b),
    })
}

/// Uniform trapezoid rule with `n` nodes on `[a, b]`, endpoints included.
pub fn uniform_trapezoid(n: usize, a: f64, b: f64) -> Result<QuadratureRule, NumericsError> {
    if !(a < b) {
        return Err(NumericsError::InvalidInterval(a, b));
    }
    if n < 2 {
        return Err(NumericsError::InsufficientData { needed: 2, got: n });
    }
    let h = (b - a) / (n - 1) as f64;
    let nodes: Vec<f64> = (0..n).map(|i| a + i as f64 * h).collect();
    let mut weights = vec![h; n];
    weights[0] = 0.5 * h;
    weights[n - 1] = 0.5 * h;
    Ok(QuadratureRule {
        nodes,
        weights,
        interval: (a, b),
    })
}

fn nested_rules() -> &'static (QuadratureRule, QuadratureRule) {
    static RULES: OnceLock<(QuadratureRule, QuadratureRule)> = OnceLock::new();
    RULES.get_or_init(|| {
        (
            gauss_legendre(15, 0.0, 1.0).unwrap(),
            gauss_legendre(31, 0.0, 1.0).unwrap(),
        )
    })
}

fn panel_estimates(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> (f64, f64) {
    let (coarse, fine) = nested_rules();
    let h = hi - lo;
    let eval = |rule: &QuadratureRule| -> f64 {
        rule.nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&t, &w)| w * h * f(lo + t * h))
            .sum()
    };
    (eval(coarse), eval(fine))
}

/// Adaptive panel integration of a real-valued function on `[a, b]`.
///
/// Panels are bisected where the nested 15/31-node Gauss estimates disagree,
/// down to the absolute tolerance `abs_tol` distributed over panel widths.
/// Interior `breakpoints` become initial panel boundaries so no panel
/// straddles a known kink or integrable singularity.
pub fn integrate_adaptive(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    abs_tol: f64,
    breakpoints: &[f64],
) -> f64 {
    if a == b {
        return 0.0;
    }
    let (a, b, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&s| s > a && s < b)
        .collect();
    cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    cuts.dedup();
    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(a);
    edges.extend(cuts);
    edges.push(b);

    const MAX_DEPTH: u32 = 70;
    let total_width = b - a;
    let mut result = 0.0;
    let mut stack: Vec<(f64, f64, u32)> = edges
        .windows(2)
        .rev()
        .map(|w| (w[0], w[1], 0))
        .collect();
    while let Some((lo, hi, depth)) = stack.pop() {
        let (coarse, fine) = panel_estimates(&f, lo, hi);
        let err = (fine - coarse).abs();
        let local_tol = abs_tol * ((hi - lo) / total_width).max(1e-30);
        if err <= local_tol || depth >= MAX_DEPTH || !err.is_finite() {
            result += fine;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi, depth + 1));
            stack.push((lo, mid, depth + 1));
        }
    }
    sign * result
}
