//! Digamma and trigamma functions.
//!
//! Two deliberately separate paths:
//!
//! * exact: at a positive integer `l`, `psi_0(l) = -gamma + H_{l-1}` and
//!   `psi_1(l) = pi^2/6 - H^(2)_{l-1}`, returned as [`SymExpr`] values backed
//!   by a shared table of harmonic numbers;
//! * floating point: for positive real arguments, upward recurrence into the
//!   asymptotic region plus a Bernoulli-series tail, used only to cross-check
//!   quadrature results.
//!
//! There is no silent conversion between the two.

use crate::error::{Error, Result};
use crate::exactnum::rational::{rat, Rat};
use crate::exactnum::symexpr::SymExpr;
use num_traits::Zero;
use std::sync::{Mutex, OnceLock};

/// Cache of harmonic numbers `H_l` and `H^(2)_l` underlying the exact
/// integer-argument digamma and trigamma values.
#[derive(Debug, Default)]
pub struct PolygammaTable {
    harmonic: Vec<Rat>,
    harmonic2: Vec<Rat>,
}

impl PolygammaTable {
    pub fn new() -> Self {
        Self {
            harmonic: vec![Rat::zero()],
            harmonic2: vec![Rat::zero()],
        }
    }

    pub fn with_capacity(l_max: usize) -> Self {
        let mut t = Self::new();
        t.ensure(l_max);
        t
    }

    fn ensure(&mut self, l: usize) {
        while self.harmonic.len() <= l {
            let k = self.harmonic.len() as i64;
            let last = self.harmonic.last().expect("nonempty").clone();
            self.harmonic.push(last + rat(1, k));
            let last2 = self.harmonic2.last().expect("nonempty").clone();
            self.harmonic2.push(last2 + rat(1, k * k));
        }
    }

    /// `H_l` (with `H_0 = 0`).
    pub fn harmonic(&mut self, l: usize) -> Rat {
        self.ensure(l);
        self.harmonic[l].clone()
    }

    /// `H^(2)_l` (with `H^(2)_0 = 0`).
    pub fn harmonic2(&mut self, l: usize) -> Rat {
        self.ensure(l);
        self.harmonic2[l].clone()
    }

    /// Exact `psi_0(l) = -gamma + H_{l-1}` for `l >= 1`.
    pub fn psi0(&mut self, l: usize) -> SymExpr {
        assert!(l >= 1, "psi0 requires a positive argument");
        &SymExpr::from_rat(self.harmonic(l - 1)) - &SymExpr::gamma()
    }

    /// Exact `psi_1(l) = pi^2/6 - H^(2)_{l-1}` for `l >= 1`.
    pub fn psi1(&mut self, l: usize) -> SymExpr {
        assert!(l >= 1, "psi1 requires a positive argument");
        &SymExpr::pi_squared().scale(&rat(1, 6)) - &SymExpr::from_rat(self.harmonic2(l - 1))
    }
}

fn shared_table() -> &'static Mutex<PolygammaTable> {
    static TABLE: OnceLock<Mutex<PolygammaTable>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(PolygammaTable::new()))
}

fn positive(l: i64, what: &'static str) -> Result<usize> {
    if l >= 1 {
        Ok(l as usize)
    } else {
        Err(Error::Domain {
            what,
            requirement: "a positive integer argument",
            got: l.to_string(),
        })
    }
}

/// Exact digamma at a positive integer.
pub fn psi0_int(l: i64) -> Result<SymExpr> {
    let l = positive(l, "psi0_int")?;
    Ok(shared_table().lock().expect("polygamma table lock").psi0(l))
}

/// Exact trigamma at a positive integer.
pub fn psi1_int(l: i64) -> Result<SymExpr> {
    let l = positive(l, "psi1_int")?;
    Ok(shared_table().lock().expect("polygamma table lock").psi1(l))
}

/// `H_{l}` as an exact rational (`H_0 = 0`).
pub fn harmonic(l: u64) -> Rat {
    shared_table()
        .lock()
        .expect("polygamma table lock")
        .harmonic(l as usize)
}

/// `H^(2)_{l}` as an exact rational.
pub fn harmonic2(l: u64) -> Rat {
    shared_table()
        .lock()
        .expect("polygamma table lock")
        .harmonic2(l as usize)
}

/// Exact check of the shift identities
/// `psi_0(l+n) = psi_0(l) + sum_{k=0}^{n-1} 1/(l+k)` and
/// `psi_1(l+n) = psi_1(l) - sum_{k=0}^{n-1} 1/(l+k)^2`.
pub fn psi_shift_check(l: u32, n: u32) -> bool {
    if l < 1 || n < 1 {
        return false;
    }
    let (l, n) = (i64::from(l), i64::from(n));
    let lhs0 = psi0_int(l + n).expect("positive");
    let lhs1 = psi1_int(l + n).expect("positive");
    let mut shift0 = Rat::zero();
    let mut shift1 = Rat::zero();
    for k in 0..n {
        shift0 += rat(1, l + k);
        shift1 += rat(1, (l + k) * (l + k));
    }
    let rhs0 = &psi0_int(l).expect("positive") + &SymExpr::from_rat(shift0);
    let rhs1 = &psi1_int(l).expect("positive") - &SymExpr::from_rat(shift1);
    lhs0 == rhs0 && lhs1 == rhs1
}

// Bernoulli-number coefficients B_{2k}/(2k) for k = 1..8, used by the
// digamma asymptotic series.
const DIGAMMA_TAIL: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

// Bernoulli numbers B_{2k} for k = 1..8, used by the trigamma asymptotic series.
const TRIGAMMA_TAIL: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

const ASYMPTOTIC_SWITCH: f64 = 10.0;

/// Floating-point digamma for `x > 0`.
pub fn digamma_real(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain {
            what: "digamma_real",
            requirement: "x > 0",
            got: x.to_string(),
        });
    }
    let mut shift = 0.0;
    let mut z = x;
    while z < ASYMPTOTIC_SWITCH {
        shift -= 1.0 / z;
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut tail = 0.0;
    let mut power = inv2;
    for c in DIGAMMA_TAIL {
        tail += c * power;
        power *= inv2;
    }
    Ok(shift + z.ln() - 0.5 / z - tail)
}

/// Floating-point trigamma for `x > 0`.
pub fn trigamma_real(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain {
            what: "trigamma_real",
            requirement: "x > 0",
            got: x.to_string(),
        });
    }
    let mut shift = 0.0;
    let mut z = x;
    while z < ASYMPTOTIC_SWITCH {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut tail = 0.0;
    let mut power = inv * inv2;
    for c in TRIGAMMA_TAIL {
        tail += c * power;
        power *= inv2;
    }
    Ok(shift + inv + 0.5 * inv2 + tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::symexpr::sym_eval;

    #[test]
    fn psi0_small_values() {
        assert_eq!(psi0_int(1).unwrap(), -&SymExpr::gamma());
        let want = &SymExpr::from_rat(rat(3, 2)) - &SymExpr::gamma();
        assert_eq!(psi0_int(3).unwrap(), want);
        let want = &SymExpr::from_rat(rat(25, 12)) - &SymExpr::gamma();
        assert_eq!(psi0_int(5).unwrap(), want);
    }

    #[test]
    fn psi1_small_values() {
        let pi2_6 = SymExpr::pi_squared().scale(&rat(1, 6));
        assert_eq!(psi1_int(1).unwrap(), pi2_6);
        assert_eq!(psi1_int(2).unwrap(), &pi2_6 - &SymExpr::one());
        assert_eq!(
            psi1_int(5).unwrap(),
            &pi2_6 - &SymExpr::from_rat(rat(205, 144))
        );
    }

    #[test]
    fn nonpositive_arguments_are_domain_errors() {
        assert!(psi0_int(0).is_err());
        assert!(psi1_int(-3).is_err());
        assert!(digamma_real(0.0).is_err());
        assert!(trigamma_real(-1.0).is_err());
    }

    #[test]
    fn shift_identity_cases() {
        assert!(psi_shift_check(5, 1));
        assert!(psi_shift_check(1, 1));
        assert!(psi_shift_check(3, 4));
    }

    #[test]
    fn shift_identity_sweep() {
        for l in 1..=30 {
            for n in 1..=30 {
                assert!(psi_shift_check(l, n), "shift failed at l={l} n={n}");
            }
        }
    }

    #[test]
    fn float_digamma_reference_values() {
        assert!((digamma_real(1.0).unwrap() + 0.5772156649015329).abs() < 1e-14);
        assert!((trigamma_real(1.0).unwrap() - 1.6449340668482264).abs() < 1e-13);
        assert!((digamma_real(5.0).unwrap() - 1.5061176684318005).abs() < 1e-13);
        assert!((trigamma_real(5.0).unwrap() - 0.22132295573711533).abs() < 1e-14);
    }

    #[test]
    fn exact_and_float_paths_agree() {
        for l in 1..=50i64 {
            let exact0 = sym_eval(&psi0_int(l).unwrap(), 20);
            let exact1 = sym_eval(&psi1_int(l).unwrap(), 20);
            let f0 = digamma_real(l as f64).unwrap();
            let f1 = trigamma_real(l as f64).unwrap();
            assert!((exact0 - f0).abs() <= 1e-11 * (1.0 + exact0.abs()), "psi0({l})");
            assert!((exact1 - f1).abs() <= 1e-11 * (1.0 + exact1.abs()), "psi1({l})");
        }
    }

    #[test]
    fn table_matches_recomputation() {
        let mut t = PolygammaTable::with_capacity(40);
        for l in 1..=40usize {
            let mut h = Rat::zero();
            let mut h2 = Rat::zero();
            for k in 1..=(l as i64) {
                h += rat(1, k);
                h2 += rat(1, k * k);
            }
            assert_eq!(t.harmonic(l), h);
            assert_eq!(t.harmonic2(l), h2);
        }
    }
}
