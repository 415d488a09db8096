//! Exact bivariate polynomials in Euler's constant and pi^2.
//!
//! Every closed form in this crate -- digamma/trigamma values at positive
//! integers, the kernel integrals I_A and I_B, the entropy moments -- lives in
//! the ring Q[gamma, pi^2]. A `SymExpr` is the sparse canonical representation
//! `sum c_ij gamma^i (pi^2)^j`: zero coefficients are never stored, so two
//! expressions are equal iff their coefficient maps are identical.

use crate::exactnum::rational::{to_f64, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Decimal digits of the embedded numeric constants.
pub const CONST_DIGITS: u32 = 50;

// floor(gamma * 10^50) and floor(pi^2 * 10^50)
const GAMMA_SCALED: &str = "57721566490153286060651209008240243104215933593992";
const PI_SQUARED_SCALED: &str = "986960440108935861883449099987615113531369940724079";

fn const_rat(scaled_digits: &str) -> Rat {
    let numer: BigInt = scaled_digits.parse().expect("valid digit string");
    Rat::new(numer, BigInt::from(10u32).pow(CONST_DIGITS))
}

fn gamma_const() -> &'static Rat {
    static C: OnceLock<Rat> = OnceLock::new();
    C.get_or_init(|| const_rat(GAMMA_SCALED))
}

fn pi_squared_const() -> &'static Rat {
    static C: OnceLock<Rat> = OnceLock::new();
    C.get_or_init(|| const_rat(PI_SQUARED_SCALED))
}

/// Sparse exact polynomial in gamma and pi^2 with rational coefficients.
///
/// Exponent pairs are `(gamma power, pi^2 power)`. All expressions produced by
/// the moment formulas stay within gamma degree 2 and pi^2 degree 1, but the
/// ring operations themselves are unrestricted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymExpr {
    terms: BTreeMap<(u8, u8), Rat>,
}

impl SymExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// The symbol gamma (Euler's constant).
    pub fn gamma() -> Self {
        Self::monomial(1, 0, Rat::one())
    }

    /// The symbol pi^2.
    pub fn pi_squared() -> Self {
        Self::monomial(0, 1, Rat::one())
    }

    /// `c * gamma^i * (pi^2)^j`.
    pub fn monomial(gamma_pow: u8, pi2_pow: u8, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((gamma_pow, pi2_pow), c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `gamma^i (pi^2)^j` (zero if absent).
    pub fn coeff(&self, gamma_pow: u8, pi2_pow: u8) -> Rat {
        self.terms
            .get(&(gamma_pow, pi2_pow))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Iterate the nonzero terms in canonical `(gamma_pow, pi2_pow)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u8, u8), &Rat)> {
        self.terms.iter()
    }

    /// `(degree in gamma, degree in pi^2)`; `(0, 0)` for the zero expression.
    pub fn degrees(&self) -> (u8, u8) {
        self.terms
            .keys()
            .fold((0, 0), |(dg, dp), &(i, j)| (dg.max(i), dp.max(j)))
    }

    fn add_term(&mut self, key: (u8, u8), c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (k, v * c))
                .collect(),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Substitute the constants truncated to `digits` decimal places and
    /// evaluate exactly; the result is a rational approximation of the value.
    pub fn eval_rational(&self, digits: u32) -> Rat {
        let digits = digits.min(CONST_DIGITS);
        let scale = BigInt::from(10u32).pow(digits);
        let truncate = |c: &Rat| -> Rat {
            // floor(c * 10^digits) / 10^digits
            let scaled = (c.numer() * &scale) / c.denom();
            Rat::new(scaled, scale.clone())
        };
        let g = truncate(gamma_const());
        let p = truncate(pi_squared_const());
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..i {
                term *= &g;
            }
            for _ in 0..j {
                term *= &p;
            }
            acc += term;
        }
        acc
    }

    /// Numeric value at full embedded constant precision.
    pub fn eval_f64(&self) -> f64 {
        to_f64(&self.eval_rational(CONST_DIGITS))
    }
}

/// Numeric evaluation at a requested precision (`precision_digits >= 15`).
/// With `f64` output, anything at or above 15 digits substitutes constants
/// accurate well past the representable precision.
pub fn sym_eval(e: &SymExpr, precision_digits: u32) -> f64 {
    let digits = precision_digits.max(15);
    to_f64(&e.eval_rational(digits))
}

impl Add for &SymExpr {
    type Output = SymExpr;
    fn add(self, rhs: &SymExpr) -> SymExpr {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &SymExpr {
    type Output = SymExpr;
    fn sub(self, rhs: &SymExpr) -> SymExpr {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, &(-c.clone()));
        }
        out
    }
}

impl Mul for &SymExpr {
    type Output = SymExpr;
    fn mul(self, rhs: &SymExpr) -> SymExpr {
        let mut out = SymExpr::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &SymExpr {
    type Output = SymExpr;
    fn neg(self) -> SymExpr {
        SymExpr {
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SymExpr {
            type Output = SymExpr;
            fn $method(self, rhs: SymExpr) -> SymExpr {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&SymExpr> for SymExpr {
            type Output = SymExpr;
            fn $method(self, rhs: &SymExpr) -> SymExpr {
                (&self).$method(rhs)
            }
        }
        impl $trait<SymExpr> for &SymExpr {
            type Output = SymExpr;
            fn $method(self, rhs: SymExpr) -> SymExpr {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for SymExpr {
    type Output = SymExpr;
    fn neg(self) -> SymExpr {
        -&self
    }
}

impl std::iter::Sum for SymExpr {
    fn sum<I: Iterator<Item = SymExpr>>(iter: I) -> SymExpr {
        iter.fold(SymExpr::zero(), |acc, x| &acc + &x)
    }
}

/// Arithmetic operation selector for [`sym_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymOp {
    Add,
    Sub,
    Mul,
}

/// Exact polynomial arithmetic in canonical sparse form.
pub fn sym_arith(a: &SymExpr, b: &SymExpr, op: SymOp) -> SymExpr {
    match op {
        SymOp::Add => a + b,
        SymOp::Sub => a - b,
        SymOp::Mul => a * b,
    }
}

fn monomial_name(i: u8, j: u8) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("gamma".to_string()),
        _ => parts.push(format!("gamma^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("pi^2".to_string()),
        _ => parts.push(format!("(pi^2)^{j}")),
    }
    parts.join("*")
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            let negative = c < &Rat::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let name = monomial_name(i, j);
            if name.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
        }
        Ok(())
    }
}
