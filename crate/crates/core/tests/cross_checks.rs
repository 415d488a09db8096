//! Cross-module consistency checks: the closed-form evaluators against the
//! regularized integral building blocks, the intermediate reduction chain
//! for I_B, and quadrature identities tying the kernel to the moment
//! formulas.

use entropy_moments::exactnum::rational::{factorial, rat, Rat};
use entropy_moments::exactnum::symexpr::sym_eval;
use entropy_moments::laguerre::{
    cal_a_regularized, cal_b, quadrature_ia, quadrature_ib, KernelSpec, RegularizedPair,
};
use entropy_moments::moments::{self, coefficients};
use entropy_moments::polygamma::{psi0_int, psi1_int};
use entropy_moments::{quad, Dims, SymExpr};

fn dims(m: u32, n: u32) -> Dims {
    Dims::new(m, n).unwrap()
}

fn psi0(l: i64) -> SymExpr {
    psi0_int(l).unwrap()
}

fn psi1(l: i64) -> SymExpr {
    psi1_int(l).unwrap()
}

/// I_A assembled from the regularized squared-log integrals,
/// `m!/(n-1)! (A_{m-1,m-1} - A_{m-2,m})`, must equal the general closed form.
#[test]
fn ia_from_regularized_integrals() {
    for n in 1..=8u32 {
        for m in 1..=n {
            let d = dims(m, n);
            let spec = KernelSpec::new(d);
            let diag = cal_a_regularized(&spec, RegularizedPair::Diagonal);
            let off = cal_a_regularized(&spec, RegularizedPair::OffDiagonal);
            let scale = Rat::new(
                factorial(u64::from(m)),
                factorial(u64::from(n) - 1),
            );
            let assembled = (&diag - &off).scale(&scale);
            assert_eq!(assembled, moments::ia_closed(d), "at {d}");
        }
    }
}

/// Each regularized squared-log integral individually equals the exact
/// monomial oracle of its defining integral
/// `int x^(a+2) e^-x ln^2 x L_s^(a+1) L_t^(a+1) dx`.
#[test]
fn regularized_integrals_match_monomial_oracle() {
    use entropy_moments::laguerre::poly::LaguerrePoly;
    use entropy_moments::laguerre::{symbolic_integral_oracle, LogPower};
    for (m, n) in [(1u32, 3u32), (2, 2), (3, 4), (4, 6), (5, 5), (5, 8)] {
        let d = dims(m, n);
        let spec = KernelSpec::new(d);
        let alpha = d.alpha();
        let top = LaguerrePoly::new(m - 1, alpha + 1);
        let diag_poly: Vec<Rat> = {
            let mut out = vec![Rat::from_integer(0.into()); 2 * top.coeffs().len() - 1];
            for (i, a) in top.coeffs().iter().enumerate() {
                for (j, b) in top.coeffs().iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            out
        };
        let want = symbolic_integral_oracle(&diag_poly, alpha + 2, LogPower::LogSquared);
        assert_eq!(
            cal_a_regularized(&spec, RegularizedPair::Diagonal),
            want,
            "diagonal at {d}"
        );
        if m >= 2 {
            let low = LaguerrePoly::new(m - 2, alpha + 1);
            let high = LaguerrePoly::new(m, alpha + 1);
            let mut cross = vec![Rat::from_integer(0.into()); low.coeffs().len() + high.coeffs().len() - 1];
            for (i, a) in low.coeffs().iter().enumerate() {
                for (j, b) in high.coeffs().iter().enumerate() {
                    cross[i + j] += a * b;
                }
            }
            let want = symbolic_integral_oracle(&cross, alpha + 2, LogPower::LogSquared);
            assert_eq!(
                cal_a_regularized(&spec, RegularizedPair::OffDiagonal),
                want,
                "off-diagonal at {d}"
            );
        }
    }
}

/// I_B assembled from the specialized log integrals over all index patterns,
/// `sum_k k!^2 B_{k,k}^2 / (a+k)!^2 + 2 sum_{j>=1} ...`, must equal the
/// general closed form.
#[test]
fn ib_from_cal_b() {
    for n in 1..=8u32 {
        for m in 1..=n {
            let d = dims(m, n);
            let spec = KernelSpec::new(d);
            let a = i64::from(d.alpha());
            let mut acc = SymExpr::zero();
            for k in 0..i64::from(m) {
                let b = cal_b(&spec, k as u32, k as u32).unwrap();
                let norm = Rat::new(
                    factorial(k as u64) * factorial(k as u64),
                    factorial((a + k) as u64) * factorial((a + k) as u64),
                );
                acc = &acc + &b.square().scale(&norm);
            }
            for j in 1..i64::from(m) {
                for k in 0..(i64::from(m) - j) {
                    let b = cal_b(&spec, (k + j) as u32, k as u32).unwrap();
                    let norm = Rat::new(
                        factorial(k as u64) * factorial((k + j) as u64) * 2,
                        factorial((a + k) as u64) * factorial((a + k + j) as u64),
                    );
                    acc = &acc + &b.square().scale(&norm);
                }
            }
            assert_eq!(acc, moments::ib_closed(d), "at {d}");
        }
    }
}

// Closed forms of the intermediate reduction steps for I_B. These are not
// runtime evaluators; they pin down the b1..b3 coefficient transcriptions by
// reassembling the consolidated form from its three pieces.

fn ibs1_closed(m: i64, n: i64) -> SymExpr {
    let a = n - m;
    let mut acc = psi0(n).square().scale(&rat(m * n * (m + n - 1), 1));
    acc = &acc
        + &psi0(n).scale(&rat(
            3 * m.pow(3) + 15 * m * m * n + 3 * m * n * n - 6 * m * n - 3 * m - n.pow(3) + n,
            6,
        ));
    acc = &acc + &psi0(a + 2).scale(&rat((a - 1) * a * (a + 1), 6));
    &acc + &SymExpr::from_rat(rat(
        35 * m.pow(3) + 21 * m * m * n + 6 * m * n * n - 9 * m * n - 17 * m - 12 * n * n + 6 * n
            + 6,
        36,
    ))
}

fn i1_closed(m: i64, n: i64) -> SymExpr {
    let a = n - m;
    let diff = &psi0(n) - &psi0(a + 2);
    let lead = diff.scale(&rat(
        2 * m.pow(3) - 12 * m * m * n - m * m + 12 * m * n * n + 10 * m * n
            - m
            - 2 * n.pow(3)
            - n * n
            + n,
        1,
    ));
    &lead
        + &SymExpr::from_rat(rat(
            (m - 2) * (12 * m * m - 22 * m * n - 9 * m + 4 * n * n - 1),
            2,
        ))
}

fn i2_closed(m: i64, n: i64) -> SymExpr {
    let a = n - m;
    let d = Dims::new(m as u32, n as u32).unwrap();
    let mut acc = moments::residual_digamma_sum(d).scale(&rat(2 * m * n * (m + n), 1));
    let mut inner = &psi1(a + 2) - &psi1(n);
    inner = &inner - &psi0(n).square();
    inner = &inner - &psi0(a + 2).square();
    inner = &inner
        + &(&psi0(a + 2).scale(&rat(2, 1)) * &(&(&psi0(n) - &psi0(m)) + &psi0(1)));
    inner = &inner
        + &(&psi0(m) - &psi0(1)).scale(&rat(2 * (2 * n - 2 * m + 1), a * (a + 1)));
    acc = &acc + &inner.scale(&rat(m * n * (m + n), 1));
    let tail = &(&psi0(n).scale(&coefficients::b1(m, n))
        + &psi0(a + 2).scale(&coefficients::b2(m, n)))
        + &SymExpr::from_rat(coefficients::b3(m, n));
    &acc + &tail.scale(&rat(1, a * (a + 1)))
}

/// The three reduction pieces must reassemble into the consolidated I_B,
/// which in turn equals the general form. This is the check that exercises
/// the intermediate coefficients b1..b3.
#[test]
fn ib_intermediate_chain_reassembles() {
    for n in 4..=10u32 {
        for m in 3..n {
            let d = dims(m, n);
            let (mi, ni) = (i64::from(m), i64::from(n));
            let total = &(&ibs1_closed(mi, ni) + &i1_closed(mi, ni)) + &i2_closed(mi, ni);
            assert_eq!(
                total,
                moments::ib_consolidated(d).unwrap(),
                "chain vs consolidated at {d}"
            );
            assert_eq!(total, moments::ib_closed(d), "chain vs general at {d}");
        }
    }
}

/// Gamma-log-moment identities: quadrature of `int e^-r r^(a-1) ln r dr`
/// against `Gamma(a) psi0(a)`, and of the squared-log version against
/// `Gamma(a) (psi1(a) + psi0(a)^2)`.
#[test]
fn gamma_log_moment_quadrature() {
    for a in [1i64, 2, 5, 10] {
        let gamma_a = entropy_moments::exactnum::rational::to_f64(&Rat::from_integer(
            factorial((a - 1) as u64),
        ));
        let want1 = gamma_a * sym_eval(&psi0(a), 20);
        let est1 = quad::integrate(
            |r| (-r).exp() * r.powi(a as i32 - 1) * r.ln(),
            4.0 * a as f64 + 60.0,
            1e-10,
            6,
        );
        assert!(est1.converged);
        assert!(
            (est1.value - want1).abs() <= 1e-8 * want1.abs().max(1e-3),
            "log moment at a={a}: {} vs {want1}",
            est1.value
        );
        let want2 = gamma_a * sym_eval(&(&psi1(a) + &psi0(a).square()), 20);
        let est2 = quad::integrate(
            |r| (-r).exp() * r.powi(a as i32 - 1) * r.ln() * r.ln(),
            4.0 * a as f64 + 60.0,
            1e-10,
            6,
        );
        assert!(est2.converged);
        assert!(
            (est2.value - want2).abs() <= 1e-8 * want2.abs().max(1e-3),
            "squared-log moment at a={a}: {} vs {want2}",
            est2.value
        );
    }
}

/// `int x ln x K(x,x) dx` is the mean induced entropy.
#[test]
fn kernel_log_moment_is_induced_mean() {
    for (m, n) in [(1u32, 1u32), (2, 2), (3, 5), (2, 6)] {
        let d = dims(m, n);
        let spec = KernelSpec::new(d);
        let want = sym_eval(&moments::induced_mean(d), 20);
        let upper = 4.0 * f64::from(n) + 40.0 * f64::from(m) + 50.0;
        let est = quad::integrate(|x| x * x.ln() * spec.kernel_value(x, x), upper, 1e-10, 6);
        assert!(est.converged);
        assert!(
            (est.value - want).abs() <= 1e-6 * want.abs().max(1.0),
            "at {d}: {} vs {want}",
            est.value
        );
    }
}

/// Density normalization and first moment: `int X_1 = m`, `int x X_1 = m n`.
#[test]
fn one_point_density_moments() {
    for (m, n) in [(1u32, 3u32), (2, 2), (3, 4), (4, 6)] {
        let d = dims(m, n);
        let spec = KernelSpec::new(d);
        let upper = 4.0 * f64::from(n) + 40.0 * f64::from(m) + 50.0;
        let zeroth = quad::integrate(|x| spec.one_point_density(x), upper, 1e-10, 6);
        assert!((zeroth.value - f64::from(m)).abs() < 1e-8, "at {d}");
        let first = quad::integrate(|x| x * spec.one_point_density(x), upper, 1e-10, 6);
        assert!(
            (first.value - f64::from(m * n)).abs() < 1e-8 * f64::from(m * n),
            "at {d}"
        );
    }
}

/// Quadrature agreement extends past the square case up to n = 8.
#[test]
fn quadrature_agreement_at_rectangular_edge() {
    for (m, n) in [(5u32, 7u32), (6, 8), (2, 8)] {
        let d = dims(m, n);
        let spec = KernelSpec::new(d);
        let ia = quadrature_ia(&spec).unwrap();
        let want_a = moments::ia_closed(d).eval_f64();
        assert!(
            (ia.value - want_a).abs() <= 1e-6 * want_a.abs(),
            "I_A at {d}: {} vs {want_a}",
            ia.value
        );
        let ib = quadrature_ib(&spec).unwrap();
        let want_b = moments::ib_closed(d).eval_f64();
        assert!(
            (ib.value - want_b).abs() <= 1e-6 * want_b.abs(),
            "I_B at {d}: {} vs {want_b}",
            ib.value
        );
    }
}

/// Special-case rows agree with the general forms on overlapping domains.
#[test]
fn special_case_rows_match_general_forms() {
    for n in 1..=12i64 {
        let d = dims(1, n as u32);
        let (ia, ib, t2) = moments::special_cases::m1(n);
        assert_eq!(moments::ia_closed(d), ia, "IA m=1 n={n}");
        assert_eq!(moments::ib_closed(d), ib, "IB m=1 n={n}");
        assert_eq!(moments::assemble_induced_second_moment(d), t2);
    }
    for n in 2..=12i64 {
        let d = dims(2, n as u32);
        let (ia, ib, t2) = moments::special_cases::m2(n);
        assert_eq!(moments::ia_closed(d), ia, "IA m=2 n={n}");
        assert_eq!(moments::ib_closed(d), ib, "IB m=2 n={n}");
        assert_eq!(moments::assemble_induced_second_moment(d), t2);
    }
    for n in 1..=12i64 {
        let d = dims(n as u32, n as u32);
        let (ia, ib, t2) = moments::special_cases::square(n);
        assert_eq!(moments::ia_closed(d), ia, "IA m=n={n}");
        assert_eq!(moments::ib_closed(d), ib, "IB m=n={n}");
        assert_eq!(moments::assemble_induced_second_moment(d), t2);
    }
}
