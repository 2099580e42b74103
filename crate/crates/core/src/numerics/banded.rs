//! Banded complex linear systems solved by elimination without pivoting.

use crate::error::NumericsError;
use num_complex::Complex64;

/// A complex n-by-n matrix stored by diagonals within a fixed bandwidth.
#[derive(Debug, Clone)]
pub struct BandedComplexSystem {
    size: usize,
    bandwidth: usize,
    /// `diagonals[k]` holds the diagonal at offset `k as isize - bandwidth`,
    /// with length `size - |offset|`.
    diagonals: Vec<Vec<Complex64>>,
}

impl BandedComplexSystem {
    /// Builds a system from `(offset, entries)` pairs. Offsets not listed are
    /// zero. Entry vectors must have length `size - |offset|`.
    pub fn from_diagonals(
        size: usize,
        diagonals: &[(isize, Vec<Complex64>)],
    ) -> Result<Self, NumericsError> {
        let bandwidth = diagonals
            .iter()
            .map(|(off, _)| off.unsigned_abs())
            .max()
            .unwrap_or(0);
        if diagonals.iter().any(|(off, _)| off.unsigned_abs() >= size) {
            return Err(NumericsError::DimensionMismatch(format!(
                "diagonal offset exceeds matrix size {size}"
            )));
        }
        let mut bands = vec![Vec::new(); 2 * bandwidth + 1];
        for k in 0..=2 * bandwidth {
            let off = k as isize - bandwidth as isize;
            bands[k] = vec![Complex64::default(); size - off.unsigned_abs()];
        }
        for (off, entries) in diagonals {
            let expect = size - off.unsigned_abs();
            if entries.len() != expect {
                return Err(NumericsError::DimensionMismatch(format!(
                    "diagonal at offset {off} has {} entries, expected {expect}",
                    entries.len()
                )));
            }
            bands[(off + bandwidth as isize) as usize] = entries.clone();
        }
        Ok(Self {
            size,
            bandwidth,
            diagonals: bands,
        })
    }

    /// Convenience constructor for a tridiagonal system.
    pub fn tridiagonal(
        lower: Vec<Complex64>,
        diag: Vec<Complex64>,
        upper: Vec<Complex64>,
    ) -> Result<Self, NumericsError> {
        let size = diag.len();
        Self::from_diagonals(size, &[(-1, lower), (0, diag), (1, upper)])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    /// Entry A[i][j], zero outside the band.
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        let off = j as isize - i as isize;
        if off.unsigned_abs() > self.bandwidth {
            return Complex64::default();
        }
        let band = &self.diagonals[(off + self.bandwidth as isize) as usize];
        band[i.min(j)]
    }

    /// Dense matrix-vector product, used for residual checks.
    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let b = self.bandwidth as isize;
        (0..self.size)
            .map(|i| {
                let lo = (i as isize - b).max(0) as usize;
                let hi = ((i as isize + b) as usize).min(self.size - 1);
                (lo..=hi).map(|j| self.entry(i, j) * x[j]).sum()
            })
            .collect()
    }
}

/// Solves the banded system by Gaussian elimination without pivoting.
///
/// The gallery's shifted systems are diagonally dominant off the real axis,
/// so pivoting is skipped to preserve the band; a pivot-magnitude guard
/// reports genuinely singular systems instead of dividing by zero.
pub fn solve_banded(
    system: &BandedComplexSystem,
    rhs: &[Complex64],
) -> Result<Vec<Complex64>, NumericsError> {
    let n = system.size;
    let b = system.bandwidth;
    if rhs.len() != n {
        return Err(NumericsError::DimensionMismatch(format!(
            "rhs length {} does not match system size {n}",
            rhs.len()
        )));
    }
    // Row-major working band: w[i][j - i + b] = A[i][j].
    let width = 2 * b + 1;
    let mut w = vec![Complex64::default(); n * width];
    for i in 0..n {
        let lo = i.saturating_sub(b);
        let hi = (i + b).min(n - 1);
        for j in lo..=hi {
            w[i * width + (j + b - i)] = system.entry(i, j);
        }
    }
    let mut x = rhs.to_vec();

    for k in 0..n {
        let pivot = w[k * width + b];
        if pivot.norm() <= 1e-300 {
            return Err(NumericsError::SingularSystem(pivot.norm(), k));
        }
        let hi = (k + b).min(n - 1);
        let xk = x[k];
        for i in k + 1..=hi {
            let factor = w[i * width + (k + b - i)] / pivot;
            if factor == Complex64::default() {
                continue;
            }
            for j in k..=hi.min(k + b) {
                let akj = w[k * width + (j + b - k)];
                w[i * width + (j + b - i)] -= factor * akj;
            }
            x[i] -= factor * xk;
        }
    }
    for k in (0..n).rev() {
        let hi = (k + b).min(n - 1);
        let mut sum = x[k];
        for j in k + 1..=hi {
            sum -= w[k * width + (j + b - k)] * x[j];
        }
        x[k] = sum / w[k * width + b];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::dense::solve_dense;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_returns_rhs() {
        let n = 7;
        let sys =
            BandedComplexSystem::from_diagonals(n, &[(0, vec![c(1.0, 0.0); n])]).unwrap();
        let rhs: Vec<Complex64> = (0..n).map(|i| c(i as f64, -(i as f64))).collect();
        let x = solve_banded(&sys, &rhs).unwrap();
        for (xi, bi) in x.iter().zip(&rhs) {
            assert!((xi - bi).norm() < 1e-15);
        }
    }

    #[test]
    fn five_point_tridiagonal_matches_dense_oracle() {
        let lower = vec![c(-1.0, 0.2); 4];
        let diag = vec![c(3.0, 1.0); 5];
        let upper = vec![c(-0.5, -0.1); 4];
        let sys = BandedComplexSystem::tridiagonal(lower, diag, upper).unwrap();
        let rhs: Vec<Complex64> = (0..5).map(|i| c(1.0 + i as f64, 0.5 * i as f64)).collect();
        let x = solve_banded(&sys, &rhs).unwrap();

        let dense: Vec<Vec<Complex64>> = (0..5)
            .map(|i| (0..5).map(|j| sys.entry(i, j)).collect())
            .collect();
        let y = solve_dense(&dense, &rhs).unwrap();
        for (xi, yi) in x.iter().zip(&y) {
            assert!((xi - yi).norm() < 1e-12);
        }
    }

    #[test]
    fn complex_shift_forces_complex_solution() {
        let n = 20;
        let z = c(0.7, 0.3);
        let diag: Vec<Complex64> = (0..n).map(|i| c(2.0 + i as f64 * 0.1, 0.0) - z).collect();
        let off = vec![c(-1.0, 0.0); n - 1];
        let sys = BandedComplexSystem::tridiagonal(off.clone(), diag, off).unwrap();
        let rhs = vec![c(1.0, 0.0); n];
        let x = solve_banded(&sys, &rhs).unwrap();
        let max_imag = x.iter().map(|v| v.im.abs()).fold(0.0, f64::max);
        assert!(max_imag > 1e-3, "imaginary part {max_imag} unexpectedly small");
    }

    #[test]
    fn singular_pivot_detected() {
        let sys = BandedComplexSystem::from_diagonals(
            3,
            &[(0, vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])],
        )
        .unwrap();
        let err = solve_banded(&sys, &[c(1.0, 0.0); 3]).unwrap_err();
        assert!(matches!(err, NumericsError::SingularSystem(_, 1)));
    }

    #[test]
    fn random_wide_band_systems_agree_with_dense_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &(n, b) in &[(12usize, 2usize), (60, 3), (200, 1), (200, 4)] {
            // diagonally dominant, well-conditioned
            let mut diags: Vec<(isize, Vec<Complex64>)> = Vec::new();
            for off in -(b as isize)..=(b as isize) {
                let len = n - off.unsigned_abs();
                let scale = if off == 0 { 0.0 } else { 1.0 };
                let entries: Vec<Complex64> = (0..len)
                    .map(|_| {
                        c(
                            scale * rng.gen_range(-1.0..1.0)
                                + if off == 0 { 4.0 * b as f64 } else { 0.0 },
                            rng.gen_range(-1.0..1.0),
                        )
                    })
                    .collect();
                diags.push((off, entries));
            }
            let sys = BandedComplexSystem::from_diagonals(n, &diags).unwrap();
            let rhs: Vec<Complex64> = (0..n)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let x = solve_banded(&sys, &rhs).unwrap();

            let dense: Vec<Vec<Complex64>> = (0..n)
                .map(|i| (0..n).map(|j| sys.entry(i, j)).collect())
                .collect();
            let y = solve_dense(&dense, &rhs).unwrap();
            let diff = x
                .iter()
                .zip(&y)
                .map(|(xi, yi)| (xi - yi).norm())
                .fold(0.0, f64::max);
            let scale = y.iter().map(|v| v.norm()).fold(0.0, f64::max);
            assert!(diff / scale < 1e-10, "n={n} b={b}: rel diff {}", diff / scale);

            // residual contract
            let ax = sys.matvec(&x);
            let res = ax
                .iter()
                .zip(&rhs)
                .map(|(ai, bi)| (ai - bi).norm())
                .fold(0.0, f64::max);
            let bnorm = rhs.iter().map(|v| v.norm()).fold(0.0, f64::max);
            assert!(res / bnorm < 1e-10);
        }
    }
}
