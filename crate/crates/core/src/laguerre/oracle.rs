//! Exact monomial-integration oracle.
//!
//! Expands an exact polynomial against the weight `x^a e^{-x} ln^p x` and
//! integrates term by term with
//! `int x^c e^{-x} dx = Gamma(c+1)`,
//! `int x^c e^{-x} ln x dx = Gamma(c+1) psi_0(c+1)`,
//! `int x^c e^{-x} ln^2 x dx = Gamma(c+1) (psi_1(c+1) + psi_0^2(c+1))`.
//!
//! This path never touches the closed-form machinery it certifies: I_A comes
//! from expanding the kernel diagonal, I_B from expanding the squared kernel
//! and integrating each variable separately.

use crate::dims::Dims;
use crate::exactnum::rational::{factorial, Rat};
use crate::exactnum::symexpr::SymExpr;
use crate::laguerre::kernel::KernelSpec;
use crate::laguerre::poly::{poly_add, poly_mul, poly_scale, LaguerrePoly};
use crate::polygamma::{psi0_int, psi1_int};
use num_traits::Zero;

/// Power of the logarithm in the weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogPower {
    None,
    Log,
    LogSquared,
}

/// Exact `int_0^inf x^a_offset e^{-x} ln^p(x) poly(x) dx` by monomial expansion.
pub fn symbolic_integral_oracle(poly: &[Rat], a_offset: u32, log_power: LogPower) -> SymExpr {
    let mut acc = SymExpr::zero();
    for (i, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let arg = i64::from(a_offset) + i as i64 + 1;
        let gamma_factor = Rat::from_integer(factorial((arg - 1) as u64));
        let factor = match log_power {
            LogPower::None => SymExpr::one(),
            LogPower::Log => psi0_int(arg).expect("positive"),
            LogPower::LogSquared => {
                let p0 = psi0_int(arg).expect("positive");
                &psi1_int(arg).expect("positive") + &p0.square()
            }
        };
        acc = &acc + &factor.scale(&(c * gamma_factor));
    }
    acc
}

/// Exact coefficients of the kernel diagonal with the weight stripped:
/// `K(x, x) = x^alpha e^{-x} * P(x)` with `P = sum_k (k!/(alpha+k)!) (L_k^(alpha))^2`.
pub fn kernel_diag_poly(spec: &KernelSpec) -> Vec<Rat> {
    let alpha = spec.alpha();
    let mut acc = Vec::new();
    for k in 0..spec.dims().m() {
        let l = LaguerrePoly::new(k, alpha);
        let sq = poly_mul(l.coeffs(), l.coeffs());
        let norm = Rat::new(
            factorial(u64::from(k)),
            factorial(u64::from(alpha + k)),
        );
        acc = poly_add(&acc, &poly_scale(&sq, &norm));
    }
    acc
}

/// Exact coefficients of the one-point density with the weight stripped,
/// from the difference form
/// `m!/(n-1)! ((L_{m-1}^(alpha+1))^2 - L_{m-2}^(alpha+1) L_m^(alpha+1))`.
pub fn one_point_poly(spec: &KernelSpec) -> Vec<Rat> {
    let m = spec.dims().m();
    let n = spec.dims().n();
    let alpha = spec.alpha();
    let top = LaguerrePoly::new(m - 1, alpha + 1);
    let mut acc = poly_mul(top.coeffs(), top.coeffs());
    if m >= 2 {
        let low = LaguerrePoly::new(m - 2, alpha + 1);
        let high = LaguerrePoly::new(m, alpha + 1);
        let cross = poly_mul(low.coeffs(), high.coeffs());
        acc = poly_add(&acc, &poly_scale(&cross, &Rat::from_integer((-1).into())));
    }
    let scale = Rat::new(factorial(u64::from(m)), factorial(u64::from(n) - 1));
    poly_scale(&acc, &scale)
}

/// Exact I_A by monomial expansion of the kernel diagonal:
/// `int x^2 ln^2 x K(x,x) dx`.
pub fn oracle_ia(dims: Dims) -> SymExpr {
    let spec = KernelSpec::new(dims);
    let poly = kernel_diag_poly(&spec);
    symbolic_integral_oracle(&poly, spec.alpha() + 2, LogPower::LogSquared)
}

/// Exact I_B by expanding the squared kernel and integrating each variable
/// separately:
/// `I_B = sum_{s,t} s! t! / ((alpha+s)! (alpha+t)!) J_{s,t}^2` with
/// `J_{s,t} = int x^{alpha+1} e^{-x} ln x L_s L_t dx` from the monomial oracle.
pub fn oracle_ib(dims: Dims) -> SymExpr {
    let spec = KernelSpec::new(dims);
    let alpha = spec.alpha();
    let m = dims.m();
    let polys: Vec<LaguerrePoly> = (0..m).map(|k| LaguerrePoly::new(k, alpha)).collect();
    let mut acc = SymExpr::zero();
    for s in 0..m as usize {
        for t in 0..m as usize {
            let prod = poly_mul(polys[s].coeffs(), polys[t].coeffs());
            let j = symbolic_integral_oracle(&prod, alpha + 1, LogPower::Log);
            let norm = Rat::new(
                factorial(s as u64) * factorial(t as u64),
                factorial(u64::from(alpha) + s as u64)
                    * factorial(u64::from(alpha) + t as u64),
            );
            acc = &acc + &j.square().scale(&norm);
        }
    }
    acc
}
