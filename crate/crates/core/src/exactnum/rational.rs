//! Arbitrary-precision rational arithmetic helpers.
//!
//! The representation is `num_rational::BigRational`, which keeps every value
//! in canonical form (positive denominator, gcd-reduced) after each operation.
//! Factorials up to a few hundred appear in the moment formulas, far past the
//! range of machine integers.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Canonical exact rational: arbitrary-precision numerator, positive denominator.
pub type Rat = num_rational::BigRational;

/// `p / q` as an exact rational. Panics if `q == 0`; use [`rat_arith`] for
/// checked division of runtime values.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// `n` as an exact rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// `n!` as an exact rational.
pub fn factorial_rat(n: u64) -> Rat {
    Rat::from_integer(factorial(n))
}

/// Ordinary binomial coefficient `C(n, k)` for nonnegative integers.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial coefficient `C(a, j)` for integer `a` of either sign:
/// the falling-factorial product `a (a-1) ... (a-j+1) / j!`, with `C(a, j) = 0`
/// for `j < 0`. For `a >= 0` this reduces to the ordinary binomial (zero when
/// `j > a`); for `a < 0` it is never zero.
pub fn binom_gen(a: i64, j: i64) -> Rat {
    if j < 0 {
        return Rat::zero();
    }
    let mut numer = BigInt::one();
    for i in 0..j {
        numer *= a - i;
    }
    Rat::new(numer, factorial(j as u64))
}

/// Arithmetic operation selector for [`rat_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact rational arithmetic with checked division.
pub fn rat_arith(a: &Rat, b: &Rat, op: RatOp) -> Result<Rat> {
    match op {
        RatOp::Add => Ok(a + b),
        RatOp::Sub => Ok(a - b),
        RatOp::Mul => Ok(a * b),
        RatOp::Div => {
            if b.is_zero() {
                Err(Error::DivisionByZero)
            } else {
                Ok(a / b)
            }
        }
    }
}

/// Lossy conversion to `f64` (correctly rounded by the underlying division).
pub fn to_f64(r: &Rat) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// `|r|` as an exact rational.
pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_addition() {
        assert_eq!(rat_arith(&rat(1, 2), &rat(1, 3), RatOp::Add).unwrap(), rat(5, 6));
    }

    #[test]
    fn common_denominator_reduction() {
        // appears as the rational part of the m = n = 2 entropy variance
        let v = &(&rat(205, 144) - &rat(4, 5)) - &rat(21, 80);
        assert_eq!(v, rat(13, 36));
    }

    #[test]
    fn canonicalization() {
        let v = rat_arith(&rat(3, 6), &int(1), RatOp::Mul).unwrap();
        assert_eq!(v, rat(1, 2));
        assert_eq!(v.numer(), &BigInt::from(1));
        assert_eq!(v.denom(), &BigInt::from(2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            rat_arith(&int(1), &int(0), RatOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        // 21! overflows u64; must still be exact
        assert_eq!(
            factorial(21).to_string(),
            "51090942171709440000"
        );
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(binom_gen(5, 2), int(10));
        assert_eq!(binom_gen(3, 5), Rat::zero());
        assert_eq!(binom_gen(1, -2), Rat::zero());
        // C(-1, 3) = (-1)(-2)(-3)/6 = -1
        assert_eq!(binom_gen(-1, 3), int(-1));
        // C(-2, 2) = (-2)(-3)/2 = 3
        assert_eq!(binom_gen(-2, 2), int(3));
    }

    #[test]
    fn binom_matches_generalized_on_common_domain() {
        for n in 0..12u64 {
            for k in 0..14u64 {
                assert_eq!(
                    Rat::from_integer(binom(n, k)),
                    binom_gen(n as i64, k as i64)
                );
            }
        }
    }
}
