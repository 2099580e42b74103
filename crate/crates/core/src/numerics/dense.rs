//! Dense complex LU with partial pivoting.
//!
//! Reference path only: the banded solver and the rank-one resolvent are
//! checked against this straightforward elimination.

use crate::error::NumericsError;
use num_complex::Complex64;

/// Solves `A x = b` for dense square complex `A` by LU with partial pivoting.
pub fn solve_dense(a: &[Vec<Complex64>], b: &[Complex64]) -> Result<Vec<Complex64>, NumericsError> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) || b.len() != n {
        return Err(NumericsError::DimensionMismatch(format!(
            "expected square {n}x{n} system with matching rhs"
        )));
    }
    let mut m: Vec<Vec<Complex64>> = a.to_vec();
    let mut x = b.to_vec();
    for k in 0..n {
        let (piv_row, piv_norm) = (k..n)
            .map(|i| (i, m[i][k].norm()))
            .max_by(|l, r| l.1.partial_cmp(&r.1).unwrap())
            .unwrap();
        if piv_norm <= 1e-300 {
            return Err(NumericsError::SingularSystem(piv_norm, k));
        }
        m.swap(k, piv_row);
        x.swap(k, piv_row);
        let pivot = m[k][k];
        for i in k + 1..n {
            let factor = m[i][k] / pivot;
            if factor == Complex64::default() {
                continue;
            }
            for j in k..n {
                let mkj = m[k][j];
                m[i][j] -= factor * mkj;
            }
            let xk = x[k];
            x[i] -= factor * xk;
        }
    }
    for k in (0..n).rev() {
        let mut sum = x[k];
        for j in k + 1..n {
            sum -= m[k][j] * x[j];
        }
        x[k] = sum / m[k][k];
    }
    Ok(x)
}
