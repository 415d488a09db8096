//! Generalized Laguerre polynomials: float evaluation by the three-term
//! recurrence and exact rational coefficient form.

use crate::exactnum::rational::{binom, factorial, Rat};
use num_traits::Zero;

/// `L_k^(alpha)(x)` by the stable three-term recurrence.
pub fn laguerre_eval(k: u32, alpha: u32, x: f64) -> f64 {
    let a = f64::from(alpha);
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - x;
    for i in 1..k {
        let fi = f64::from(i);
        let next = ((2.0 * fi + a + 1.0 - x) * cur - (fi + a) * prev) / (fi + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact coefficient representation of `L_k^(alpha)`: the coefficient of
/// `x^i` is `(-1)^i C(alpha + k, k - i) / i!`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaguerrePoly {
    degree: u32,
    alpha: u32,
    coeffs: Vec<Rat>,
}

impl LaguerrePoly {
    pub fn new(degree: u32, alpha: u32) -> Self {
        let k = u64::from(degree);
        let a = u64::from(alpha);
        let coeffs = (0..=k)
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                Rat::new(binom(a + k, k - i) * sign, factorial(i))
            })
            .collect();
        Self {
            degree,
            alpha,
            coeffs,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    /// Coefficients of `x^0 .. x^degree`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Horner evaluation of the coefficient form in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + crate::exactnum::rational::to_f64(c);
        }
        acc
    }
}

/// Exact product of two coefficient lists.
pub(crate) fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

pub(crate) fn poly_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

pub(crate) fn poly_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn degree_zero_is_one() {
        assert_eq!(laguerre_eval(0, 3, 7.5), 1.0);
    }

    #[test]
    fn degree_one_value() {
        // L_1^(0)(x) = 1 - x
        assert_eq!(laguerre_eval(1, 0, 2.0), -1.0);
    }

    #[test]
    fn value_at_zero_is_binomial() {
        // L_2^(1)(0) = C(3, 2) = 3
        assert_eq!(laguerre_eval(2, 1, 0.0), 3.0);
        let p = LaguerrePoly::new(2, 1);
        assert_eq!(p.coeffs()[0], rat(3, 1));
    }

    #[test]
    fn explicit_coefficients() {
        // L_2^(0) = 1 - 2x + x^2/2
        let p = LaguerrePoly::new(2, 0);
        assert_eq!(p.coeffs(), &[rat(1, 1), rat(-2, 1), rat(1, 2)]);
    }

    proptest! {
        #[test]
        fn coefficient_and_recurrence_evaluation_agree(
            k in 0u32..9,
            alpha in 0u32..8,
            // x in [0, 4n] with n <= 8
            x in 0.0f64..32.0,
        ) {
            let p = LaguerrePoly::new(k, alpha);
            let from_coeffs = p.eval_f64(x);
            let from_recurrence = laguerre_eval(k, alpha, x);
            let scale = 1.0f64.max(from_recurrence.abs());
            prop_assert!((from_coeffs - from_recurrence).abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn poly_mul_square() {
        // (1 - x)^2 = 1 - 2x + x^2
        let l1 = LaguerrePoly::new(1, 0);
        let sq = poly_mul(l1.coeffs(), l1.coeffs());
        assert_eq!(sq, vec![rat(1, 1), rat(-2, 1), rat(1, 1)]);
    }
}
