//! Correlation kernel of the Laguerre ensemble.
//!
//! `K(x, y) = sqrt(e^{-x-y} (xy)^alpha) sum_{k<m} C_k(x) C_k(y) / (k! (alpha+k)!)`
//! with `C_k = (-1)^k k! L_k^(alpha)` and `alpha = n - m`. The diagonal equals
//! the one-point correlation function, for which the difference form
//! `X_1(x) = m!/(n-1)! x^alpha e^{-x} ((L_{m-1}^(alpha+1))^2 - L_{m-2}^(alpha+1) L_m^(alpha+1))`
//! is also provided (with `L_{-1} = 0` so it is total at `m = 1`).

use crate::dims::Dims;
use crate::exactnum::rational::{factorial, Rat};
use crate::laguerre::poly::laguerre_eval;
use num_bigint::BigInt;
use num_traits::One;

/// Kernel parameters for one dimension pair.
#[derive(Debug, Clone)]
pub struct KernelSpec {
    dims: Dims,
    normalization: Rat,
}

impl KernelSpec {
    pub fn new(dims: Dims) -> Self {
        // c = prod_{i=1}^m Gamma(n - i + 1) Gamma(i)
        let mut c = BigInt::one();
        for i in 1..=u64::from(dims.m()) {
            c *= factorial(u64::from(dims.n()) - i) * factorial(i - 1);
        }
        Self {
            dims,
            normalization: Rat::from_integer(c),
        }
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// Weight exponent `n - m`.
    pub fn alpha(&self) -> u32 {
        self.dims.alpha()
    }

    /// The ensemble normalization constant `c` (positive).
    pub fn normalization(&self) -> &Rat {
        &self.normalization
    }

    /// Orthonormal weighted basis `phi_k(x)`, `k = 0..m`, with
    /// `K(x, y) = sum_k phi_k(x) phi_k(y)`. The square-root weight is
    /// accumulated in log space so large `x` underflows cleanly to zero.
    pub fn weighted_basis(&self, x: f64) -> Vec<f64> {
        let m = self.dims.m();
        let alpha = self.alpha();
        if x == 0.0 && alpha > 0 {
            return vec![0.0; m as usize];
        }
        let log_weight = if x == 0.0 {
            0.0
        } else {
            0.5 * (f64::from(alpha) * x.ln() - x)
        };
        let weight = log_weight.exp();
        let mut out = Vec::with_capacity(m as usize);
        // norm_k^2 = k!/(alpha+k)! = 1 / prod_{i=1}^alpha (k+i)
        for k in 0..m {
            let mut denom = 1.0;
            for i in 1..=alpha {
                denom *= f64::from(k + i);
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            out.push(sign * weight / denom.sqrt() * laguerre_eval(k, alpha, x));
        }
        out
    }

    /// Kernel value `K(x, y)`; symmetric in its arguments.
    pub fn kernel_value(&self, x: f64, y: f64) -> f64 {
        self.weighted_basis(x)
            .iter()
            .zip(self.weighted_basis(y))
            .map(|(a, b)| a * b)
            .sum()
    }

    /// One-point correlation function `X_1(x)` via the difference form.
    pub fn one_point_density(&self, x: f64) -> f64 {
        let m = self.dims.m();
        let n = self.dims.n();
        let alpha = self.alpha();
        if x == 0.0 && alpha > 0 {
            return 0.0;
        }
        let log_weight = if x == 0.0 {
            0.0
        } else {
            f64::from(alpha) * x.ln() - x
        };
        // m!/(n-1)! as an exact ratio before conversion
        let scale = Rat::new(factorial(u64::from(m)), factorial(u64::from(n) - 1));
        let l_top = laguerre_eval(m - 1, alpha + 1, x);
        let l_low = if m >= 2 {
            laguerre_eval(m - 2, alpha + 1, x)
        } else {
            0.0
        };
        let l_high = laguerre_eval(m, alpha + 1, x);
        crate::exactnum::rational::to_f64(&scale)
            * log_weight.exp()
            * (l_top * l_top - l_low * l_high)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad;

    fn spec(m: u32, n: u32) -> KernelSpec {
        KernelSpec::new(Dims::new(m, n).unwrap())
    }

    #[test]
    fn normalization_constant() {
        // m = 2, n = 3: Gamma(3)Gamma(1) * Gamma(2)Gamma(2) = 2
        assert_eq!(
            spec(2, 3).normalization(),
            &Rat::from_integer(BigInt::from(2))
        );
        assert_eq!(spec(1, 1).normalization(), &Rat::one());
    }

    #[test]
    fn scalar_case_is_exponential() {
        let s = spec(1, 1);
        for x in [0.1f64, 1.0, 3.7] {
            for y in [0.2f64, 2.5] {
                let want = (-(x + y) / 2.0).exp();
                assert!((s.kernel_value(x, y) - want).abs() < 1e-14);
            }
        }
        assert!((s.one_point_density(1.0) - (-1.0f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn kernel_is_symmetric() {
        let s = spec(3, 5);
        let pairs = [(0.3, 1.7), (2.0, 9.4), (0.01, 25.0)];
        for (x, y) in pairs {
            let a = s.kernel_value(x, y);
            let b = s.kernel_value(y, x);
            assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300));
        }
    }

    #[test]
    fn diagonal_matches_difference_form() {
        for (m, n) in [(2, 2), (3, 5), (4, 4)] {
            let s = spec(m, n);
            for i in 0..100 {
                // deterministic pseudo-random abscissas in (0, 4n)
                let x = (f64::from(i) * 0.7934 + 0.013) % (4.0 * f64::from(n));
                let k = s.kernel_value(x, x);
                let d = s.one_point_density(x);
                assert!(
                    (k - d).abs() <= 1e-10 * k.abs().max(1e-12),
                    "m={m} n={n} x={x}: {k} vs {d}"
                );
            }
        }
    }

    #[test]
    fn density_vanishes_at_origin_for_rectangular_case() {
        assert_eq!(spec(2, 4).one_point_density(0.0), 0.0);
        assert_eq!(spec(2, 4).kernel_value(0.0, 1.0), 0.0);
    }

    #[test]
    fn kernel_trace_is_m() {
        for (m, n) in [(1, 1), (2, 3), (4, 6), (6, 8)] {
            let s = spec(m, n);
            let upper = 4.0 * f64::from(n) + 60.0;
            let est = quad::integrate(|x| s.kernel_value(x, x), upper, 1e-10, 6);
            assert!(est.converged);
            assert!(
                (est.value - f64::from(m)).abs() < 1e-8,
                "trace for m={m} n={n}: {}",
                est.value
            );
        }
    }

    #[test]
    fn kernel_reproduces_itself() {
        // int K(x,z) K(z,y) dz = K(x,y)
        for (m, n) in [(2, 3), (3, 3)] {
            let s = spec(m, n);
            let upper = 4.0 * f64::from(n) + 60.0;
            for (x, y) in [(0.8, 2.3), (1.5, 6.0)] {
                let est = quad::integrate(|z| s.kernel_value(x, z) * s.kernel_value(z, y), upper, 1e-10, 6);
                let want = s.kernel_value(x, y);
                assert!(
                    (est.value - want).abs() < 1e-6 * want.abs().max(1.0),
                    "m={m} n={n} ({x},{y}): {} vs {want}",
                    est.value
                );
            }
        }
    }
}
