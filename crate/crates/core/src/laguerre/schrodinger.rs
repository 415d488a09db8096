//! Closed forms for weighted Laguerre product integrals.
//!
//! The base identity evaluates `int_0^inf x^q e^{-x} L_s^(alpha) L_t^(beta) dx`
//! as a finite binomial sum; its first and second derivatives in `q` give the
//! variants with `ln x` and `ln^2 x` weights, whose terms mix binomials with
//! digamma/trigamma values. When a vanishing binomial multiplies a polygamma
//! pole the printed formulas break down; those index patterns have finite
//! regularized limits, provided here as the specialized `cal_b` /
//! `cal_a_regularized` evaluators used by the moment assembly.

use crate::error::{Error, Result};
use crate::exactnum::rational::{binom_gen, factorial, rat, Rat};
use crate::exactnum::symexpr::SymExpr;
use crate::laguerre::kernel::KernelSpec;
use crate::polygamma::{psi0_int, psi1_int};
use num_traits::Zero;

fn psi0(l: i64) -> SymExpr {
    psi0_int(l).expect("positive digamma argument by construction")
}

fn psi1(l: i64) -> SymExpr {
    psi1_int(l).expect("positive trigamma argument by construction")
}

/// Exact `int_0^inf x^q e^{-x} L_s^(alpha)(x) L_t^(beta)(x) dx` for integer
/// `q >= 0`, via the finite sum with generalized binomials (`C(a, j)` for
/// negative integer `a` is the falling-factorial product).
pub fn schrodinger_integral(q: u32, alpha: u32, beta: u32, s: u32, t: u32) -> Rat {
    let (qi, ai, bi) = (i64::from(q), i64::from(alpha), i64::from(beta));
    let mut acc = Rat::zero();
    for k in 0..=s.min(t) {
        let ki = i64::from(k);
        let pre = binom_gen(qi - ai, i64::from(s) - ki) * binom_gen(qi - bi, i64::from(t) - ki);
        if pre.is_zero() {
            continue;
        }
        acc += pre * Rat::new(factorial(u64::from(q + k)), factorial(u64::from(k)));
    }
    if (s + t) % 2 == 1 {
        -acc
    } else {
        acc
    }
}

struct TermShape {
    prefactor: Rat,
    /// digamma/trigamma arguments: q+1+k, q-alpha+1, q-beta+1 (plus),
    /// q-alpha-s+1+k, q-beta-t+1+k (minus)
    plus_args: [i64; 3],
    minus_args: [i64; 2],
}

fn term_shape(
    what: &'static str,
    q: u32,
    alpha: u32,
    beta: u32,
    s: u32,
    t: u32,
    k: u32,
) -> Result<Option<TermShape>> {
    let (qi, ai, bi, si, ti, ki) = (
        i64::from(q),
        i64::from(alpha),
        i64::from(beta),
        i64::from(s),
        i64::from(t),
        i64::from(k),
    );
    let pre = binom_gen(qi - ai, si - ki) * binom_gen(qi - bi, ti - ki);
    let plus_args = [qi + 1 + ki, qi - ai + 1, qi - bi + 1];
    let minus_args = [qi - ai - si + 1 + ki, qi - bi - ti + 1 + ki];
    let bad_arg = plus_args
        .iter()
        .chain(minus_args.iter())
        .copied()
        .find(|&a| a < 1);
    match (pre.is_zero(), bad_arg) {
        (true, None) => Ok(None),
        (true, Some(arg)) => Err(Error::DegenerateTerm { what, k, arg }),
        (false, Some(arg)) => Err(Error::PolygammaPole { what, k, arg }),
        (false, None) => Ok(Some(TermShape {
            prefactor: pre * Rat::new(factorial(u64::from(q + k)), factorial(u64::from(k))),
            plus_args,
            minus_args,
        })),
    }
}

/// Exact `int_0^inf x^q e^{-x} ln(x) L_s^(alpha) L_t^(beta) dx` for parameter
/// combinations where every contributing term is nondegenerate.
pub fn schrodinger_b(q: u32, alpha: u32, beta: u32, s: u32, t: u32) -> Result<SymExpr> {
    let mut acc = SymExpr::zero();
    for k in 0..=s.min(t) {
        let Some(shape) = term_shape("schrodinger_b", q, alpha, beta, s, t, k)? else {
            continue;
        };
        let mut combo = SymExpr::zero();
        for a in shape.plus_args {
            combo = &combo + &psi0(a);
        }
        for a in shape.minus_args {
            combo = &combo - &psi0(a);
        }
        acc = &acc + &combo.scale(&shape.prefactor);
    }
    Ok(if (s + t) % 2 == 1 { -acc } else { acc })
}

/// Exact `int_0^inf x^q e^{-x} ln^2(x) L_s^(alpha) L_t^(beta) dx` for
/// parameter combinations where every contributing term is nondegenerate.
pub fn schrodinger_a(q: u32, alpha: u32, beta: u32, s: u32, t: u32) -> Result<SymExpr> {
    let mut acc = SymExpr::zero();
    for k in 0..=s.min(t) {
        let Some(shape) = term_shape("schrodinger_a", q, alpha, beta, s, t, k)? else {
            continue;
        };
        let mut combo0 = SymExpr::zero();
        let mut combo1 = SymExpr::zero();
        for a in shape.plus_args {
            combo0 = &combo0 + &psi0(a);
            combo1 = &combo1 + &psi1(a);
        }
        for a in shape.minus_args {
            combo0 = &combo0 - &psi0(a);
            combo1 = &combo1 - &psi1(a);
        }
        let term = &combo0.square() + &combo1;
        acc = &acc + &term.scale(&shape.prefactor);
    }
    Ok(if (s + t) % 2 == 1 { -acc } else { acc })
}

/// Specialized log-weight integral `B_{s,t}^(alpha,alpha)(alpha + 1)` with
/// `alpha = n - m`, defined for the index patterns that appear in I_B. The
/// superdiagonal and far patterns are regularized limits; all three agree
/// with the true integral (and hence with [`schrodinger_b`] wherever that one
/// is defined).
pub fn cal_b(spec: &KernelSpec, s: u32, t: u32) -> Result<SymExpr> {
    let a = i64::from(spec.alpha());
    if s == t {
        // (alpha+k)!/k! ((alpha+1+2k) psi0(alpha+1+k) + 2k+1)
        let k = i64::from(s);
        let pre = Rat::new(
            factorial((a + k) as u64),
            factorial(k as u64),
        );
        let e = &psi0(a + 1 + k).scale(&rat(a + 1 + 2 * k, 1))
            + &SymExpr::from_int(2 * k + 1);
        return Ok(e.scale(&pre));
    }
    if s == t + 1 {
        // -(alpha+k)!/k! ((alpha+1+k) psi0(alpha+1+k) + alpha + 3k/2 + 2),
        // the sign carried by (-1)^{s+t} for the odd off-diagonal
        let k = i64::from(t);
        let pre = Rat::new(factorial((a + k) as u64), factorial(k as u64));
        let e = &psi0(a + 1 + k).scale(&rat(a + 1 + k, 1))
            + &SymExpr::from_rat(rat(2 * (a + 2) + 3 * k, 2));
        return Ok((-e).scale(&pre));
    }
    if s > t + 1 {
        // purely rational: (alpha+k)!/(k! j) ((alpha+1+k)/(j-1) - k/(j+1))
        let k = i64::from(t);
        let j = i64::from(s - t);
        let pre = Rat::new(factorial((a + k) as u64), factorial(k as u64) * j);
        let v = rat(a + 1 + k, j - 1) - rat(k, j + 1);
        return Ok(SymExpr::from_rat(pre * v));
    }
    Err(Error::UnsupportedIndexPattern { s, t })
}

/// Index pair selector for the regularized squared-log integrals in I_A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularizedPair {
    /// `(s, t) = (m-1, m-1)`
    Diagonal,
    /// `(s, t) = (m-2, m)`; identically zero at `m = 1` since `L_{-1} = 0`
    OffDiagonal,
}

/// Regularized `A_{s,t}^(alpha+1,alpha+1)(alpha + 2)` for the two index pairs
/// the one-point density produces. Terms that pair a vanishing binomial with
/// polygamma poles are replaced by their finite limits, which reduce to the
/// rational tail sums below; empty ranges and reciprocal factorials of
/// negative integers are zero.
pub fn cal_a_regularized(spec: &KernelSpec, pair: RegularizedPair) -> SymExpr {
    let m = i64::from(spec.dims().m());
    let n = i64::from(spec.dims().n());
    let fact_ratio = |top: i64, bottom: i64| -> Rat {
        if bottom < 0 {
            Rat::zero()
        } else {
            Rat::new(factorial(top as u64), factorial(bottom as u64))
        }
    };
    match pair {
        RegularizedPair::Diagonal => {
            let mut acc = {
                let e = &psi0(n + 2).square() + &psi1(n + 2);
                e.scale(&fact_ratio(n + 1, m - 1))
            };
            if m >= 2 {
                let shifted = &psi0(n + 1) + &SymExpr::from_int(2);
                let e = &(&shifted.square() + &psi1(n + 1)) - &SymExpr::from_int(2);
                acc = &acc + &e.scale(&fact_ratio(n, m - 2));
            }
            let mut tail = Rat::zero();
            for k in 0..=(m - 3) {
                let d = (m - 2 - k) * (m - 2 - k) * (m - 1 - k) * (m - 1 - k);
                tail += fact_ratio(n - m + 2 + k, k) * rat(2, d);
            }
            &acc + &SymExpr::from_rat(tail)
        }
        RegularizedPair::OffDiagonal => {
            let mut acc = SymExpr::zero();
            if m >= 2 {
                let e = &psi0(n + 1) + &SymExpr::one();
                acc = &acc + &e.scale(&fact_ratio(n, m - 2));
            }
            if m >= 3 {
                let e = &psi0(n) + &SymExpr::one();
                acc = &acc - &e.scale(&(fact_ratio(n - 1, m - 3) * rat(1, 3)));
            }
            let mut tail = Rat::zero();
            for k in 0..=(m - 4) {
                let d = (m - 3 - k) * (m - 2 - k) * (m - 1 - k) * (m - k);
                tail += fact_ratio(n - m + 2 + k, k) * rat(2, d);
            }
            &acc + &SymExpr::from_rat(tail)
        }
    }
}
