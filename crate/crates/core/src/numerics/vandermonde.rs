//! Residues for the kernel moment conditions via Lagrange evaluation at zero.

use crate::error::NumericsError;
use num_complex::Complex64;

/// Solves the transposed Vandermonde system `sum_j a_j^p alpha_j = delta_{p,0}`
/// for `p = 0..m-1` at distinct complex nodes.
///
/// Uses the closed form `alpha_j = l_j(0)`, the j-th Lagrange basis polynomial
/// at the origin, instead of eliminating the Vandermonde matrix directly; the
/// matrix itself is exponentially ill-conditioned already for moderate m.
pub fn solve_vandermonde(poles: &[Complex64]) -> Result<Vec<Complex64>, NumericsError> {
    let m = poles.len();
    if m == 0 {
        return Err(NumericsError::InsufficientData { needed: 1, got: 0 });
    }
    for i in 0..m {
        for j in i + 1..m {
            if (poles[i] - poles[j]).norm() < 1e-14 {
                return Err(NumericsError::DuplicatePoles(i, j));
            }
        }
    }
    let residues = (0..m)
        .map(|j| {
            let mut prod = Complex64::new(1.0, 0.0);
            for k in 0..m {
                if k != j {
                    prod *= poles[k] / (poles[k] - poles[j]);
                }
            }
            prod
        })
        .collect();
    Ok(residues)
}

/// Residuals `|sum_j a_j^p alpha_j - delta_{p,0}|` for `p = 0..m-1`.
pub fn moment_residuals(poles: &[Complex64], residues: &[Complex64]) -> Vec<f64> {
    let m = poles.len();
    let mut powers = vec![Complex64::new(1.0, 0.0); m];
    (0..m)
        .map(|p| {
            let sum: Complex64 = powers.iter().zip(residues).map(|(w, a)| w * a).sum();
            for (w, a) in powers.iter_mut().zip(poles) {
                *w *= a;
            }
            let target = if p == 0 { 1.0 } else { 0.0 };
            (sum - target).norm()
        })
        .collect()
}
