//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation first phases the pivot entry real, then applies the
//! classical symmetric Jacobi rotation, which annihilates it; off-diagonal
//! mass decreases monotonically and convergence is quadratic once small.
//! Matrices here are small (the subsystem dimension), so no pivot ordering
//! or eigenvector accumulation is needed.

use crate::error::{Error, Result};
use num_complex::Complex64;

pub const MAX_DIM: usize = 32;
const MAX_SWEEPS: usize = 100;

fn frobenius(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn off_diagonal_norm(n: usize, a: &[Complex64]) -> f64 {
    let mut acc = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            acc += 2.0 * a[p * n + q].norm_sqr();
        }
    }
    acc.sqrt()
}

/// Eigenvalues of a Hermitian matrix (row-major, length `n * n`), sorted
/// descending. The input must be Hermitian within `1e-12` relative; it is
/// symmetrized before iterating.
pub fn hermitian_eigenvalues(n: usize, matrix: &[Complex64]) -> Result<Vec<f64>> {
    assert_eq!(matrix.len(), n * n, "matrix data must be n x n");
    if n == 0 {
        return Ok(Vec::new());
    }
    if n > MAX_DIM {
        return Err(Error::MatrixTooLarge { n, max: MAX_DIM });
    }

    let scale = matrix.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    let mut deviation = 0.0f64;
    for p in 0..n {
        for q in 0..n {
            deviation = deviation.max((matrix[p * n + q] - matrix[q * n + p].conj()).norm());
        }
    }
    if deviation > 1e-12 * scale.max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }

    let mut a: Vec<Complex64> = (0..n * n)
        .map(|i| {
            let (p, q) = (i / n, i % n);
            0.5 * (matrix[p * n + q] + matrix[q * n + p].conj())
        })
        .collect();

    let norm = frobenius(&a).max(f64::MIN_POSITIVE);
    let tol = 1e-13 * norm;
    let mut sweeps = 0;
    while off_diagonal_norm(n, &a) > tol {
        if sweeps >= MAX_SWEEPS {
            return Err(Error::EigenNoConvergence {
                sweeps,
                off_norm: off_diagonal_norm(n, &a),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let h = apq.norm();
                if h <= f64::MIN_POSITIVE {
                    continue;
                }
                let phase = apq / h;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let tau = (aqq - app) / (2.0 * h);
                let t = if tau.abs() > 1e12 {
                    0.5 / tau
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // columns: [p q] <- [p q] * [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                let col_pq = phase.conj();
                for i in 0..n {
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * col_pq * aiq;
                    a[i * n + q] = s * aip + c * col_pq * aiq;
                }
                // rows: conjugate-transpose update
                for j in 0..n {
                    let apj = a[p * n + j];
                    let aqj = a[q * n + j];
                    a[p * n + j] = c * apj - s * phase * aqj;
                    a[q * n + j] = s * apj + c * phase * aqj;
                }
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                a[p * n + p] = Complex64::new(a[p * n + p].re, 0.0);
                a[q * n + q] = Complex64::new(a[q * n + q].re, 0.0);
            }
        }
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(eigenvalues)
}
