//! Instance verification of the finite-sum identities behind the moment
//! simplification: nine polygamma sum formulas, three factorial-ratio sums
//! (Chu-Vandermonde and its log-weighted relatives), the two recurrences used
//! to prove them, the Milgram digamma-over-argument sum, and the terminating
//! 4F3 byproduct.
//!
//! Every check compares a literally summed left side against a closed-form
//! right side in exact arithmetic. Right sides are assembled from an explicit
//! term list (rational coefficient times polygamma block) so tests can
//! perturb a single coefficient and watch the sweep fail.

use crate::error::{Error, Result};
use crate::exactnum::rational::{factorial, rat, Rat};
use crate::exactnum::symexpr::SymExpr;
use crate::polygamma::{psi0_int, psi1_int};
use num_traits::Zero;
use std::fmt;

fn psi0(l: i64) -> SymExpr {
    psi0_int(l).expect("positive digamma argument by construction")
}

fn psi1(l: i64) -> SymExpr {
    psi1_int(l).expect("positive trigamma argument by construction")
}

/// Identity selector. `A1`..`A9` are polygamma sums in `(n, l)`; the rest
/// are factorial-ratio statements in `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
    A10,
    A11,
    A12,
    RecS,
    RecT,
    Milgram,
    Hyp4F3,
}

pub const ALL_IDENTITIES: [IdentityId; 16] = [
    IdentityId::A1,
    IdentityId::A2,
    IdentityId::A3,
    IdentityId::A4,
    IdentityId::A5,
    IdentityId::A6,
    IdentityId::A7,
    IdentityId::A8,
    IdentityId::A9,
    IdentityId::A10,
    IdentityId::A11,
    IdentityId::A12,
    IdentityId::RecS,
    IdentityId::RecT,
    IdentityId::Milgram,
    IdentityId::Hyp4F3,
];

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::A1 => "A1",
            Self::A2 => "A2",
            Self::A3 => "A3",
            Self::A4 => "A4",
            Self::A5 => "A5",
            Self::A6 => "A6",
            Self::A7 => "A7",
            Self::A8 => "A8",
            Self::A9 => "A9",
            Self::A10 => "A10",
            Self::A11 => "A11",
            Self::A12 => "A12",
            Self::RecS => "rec-s",
            Self::RecT => "rec-t",
            Self::Milgram => "milgram",
            Self::Hyp4F3 => "4F3",
        }
    }

    /// Whether `(p1, p2)` lies in the identity's validity domain.
    pub fn valid(self, p1: i64, p2: i64) -> bool {
        match self {
            Self::A1
            | Self::A2
            | Self::A3
            | Self::A4
            | Self::A5
            | Self::A6
            | Self::A7
            | Self::A8
            | Self::A9 => p1 >= 1 && p2 >= 1,
            Self::A10 | Self::A11 => 1 <= p1 && p1 <= p2,
            Self::A12 | Self::RecS | Self::RecT | Self::Milgram | Self::Hyp4F3 => {
                1 <= p1 && p1 < p2
            }
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one exact identity check.
#[derive(Debug, Clone)]
pub struct IdentityCheckResult {
    pub id: IdentityId,
    pub params: (i64, i64),
    pub lhs: SymExpr,
    pub rhs: SymExpr,
    pub equal: bool,
}

fn fact_ratio(top: i64, bottom: i64) -> Rat {
    Rat::new(factorial(top as u64), factorial(bottom as u64))
}

/// `s(m, n) = sum_{k=1}^m (n-k)!/(m-k)! / k`, literal.
fn s_sum(m: i64, n: i64) -> Rat {
    let mut acc = Rat::zero();
    for k in 1..=m {
        acc += fact_ratio(n - k, m - k) * rat(1, k);
    }
    acc
}

/// `t(m, n) = sum_{k=1}^m (n-k)!/(m-k)! / k^2`, literal.
fn t_sum(m: i64, n: i64) -> Rat {
    let mut acc = Rat::zero();
    for k in 1..=m {
        acc += fact_ratio(n - k, m - k) * rat(1, k * k);
    }
    acc
}

/// `sum_{k=1}^m psi0(n-m+k)/k`.
fn residual_sum(m: i64, n: i64) -> SymExpr {
    let mut acc = SymExpr::zero();
    for k in 1..=m {
        acc = &acc + &psi0(n - m + k).scale(&rat(1, k));
    }
    acc
}

fn lhs(id: IdentityId, p1: i64, p2: i64) -> SymExpr {
    use IdentityId::*;
    match id {
        A1 | A2 | A3 | A4 | A5 | A6 | A7 | A8 | A9 => {
            let (n, l) = (p1, p2);
            let mut acc = SymExpr::zero();
            for k in 1..=n {
                let base = match id {
                    A1 | A2 | A3 => psi0(k + l),
                    A4 | A5 | A6 => psi0(k + l).square(),
                    _ => psi1(k + l),
                };
                let weight = match id {
                    A1 | A4 | A7 => rat(1, 1),
                    A2 | A5 | A8 => rat(k, 1),
                    _ => rat(k * k, 1),
                };
                acc = &acc + &base.scale(&weight);
            }
            acc
        }
        A10 => {
            let (m, n) = (p1, p2);
            let mut acc = Rat::zero();
            for k in 1..=m {
                acc += fact_ratio(n - k, m - k);
            }
            SymExpr::from_rat(acc)
        }
        A11 | RecS => SymExpr::from_rat(s_sum(p1, p2)),
        A12 | RecT => SymExpr::from_rat(t_sum(p1, p2)),
        Milgram => {
            let (m, n) = (p1, p2);
            let mut acc = SymExpr::zero();
            for k in 1..=m {
                acc = &acc + &psi0(n - m + k).scale(&rat(1, n - m + k));
            }
            acc
        }
        Hyp4F3 => {
            // (n-1)!/(m-1)! * 4F3(1,1,1,1-m; 2,2,1-n; 1) by its defining
            // terminating series
            let (m, n) = (p1, p2);
            let poch = |a: i64, k: i64| -> Rat {
                let mut acc = rat(1, 1);
                for i in 0..k {
                    acc *= rat(a + i, 1);
                }
                acc
            };
            let mut series = Rat::zero();
            for k in 0..m {
                let numer = poch(1, k) * poch(1, k) * poch(1, k) * poch(1 - m, k);
                let denom = poch(2, k) * poch(2, k) * poch(1 - n, k) * Rat::from_integer(factorial(k as u64));
                series += numer / denom;
            }
            SymExpr::from_rat(fact_ratio(n - 1, m - 1) * series)
        }
    }
}

/// The closed-form right side as `(coefficient, polygamma block)` terms;
/// the term count is fixed per identity.
fn rhs_terms(id: IdentityId, p1: i64, p2: i64) -> Vec<(Rat, SymExpr)> {
    use IdentityId::*;
    let one = SymExpr::one;
    match id {
        A1 => {
            let (n, l) = (p1, p2);
            vec![
                (rat(n + l, 1), psi0(n + l)),
                (rat(-l, 1), psi0(l)),
                (rat(-n, 1), one()),
            ]
        }
        A2 => {
            let (n, l) = (p1, p2);
            vec![
                (rat(n * n + n - l * l + l, 2), psi0(n + l)),
                (rat(l * (l - 1), 2), psi0(l)),
                (rat(n * (-n + 2 * l - 1), 4), one()),
            ]
        }
        A3 => {
            let (n, l) = (p1, p2);
            vec![
                (
                    rat(2 * n.pow(3) + 3 * n * n + n + 2 * l.pow(3) - 3 * l * l + l, 6),
                    psi0(n + l),
                ),
                (rat(-l * (2 * l * l - 3 * l + 1), 6), psi0(l)),
                (
                    rat(n * (-4 * n * n + 6 * n * l - 3 * n - 12 * l * l + 12 * l + 1), 36),
                    one(),
                ),
            ]
        }
        A4 => {
            let (n, l) = (p1, p2);
            vec![
                (rat(n + l, 1), psi0(n + l).square()),
                (rat(-(2 * n + 2 * l - 1), 1), psi0(n + l)),
                (rat(-l, 1), psi0(l).square()),
                (rat(2 * l - 1, 1), psi0(l)),
                (rat(2 * n, 1), one()),
            ]
        }
        A5 => {
            let (n, l) = (p1, p2);
            vec![
                (rat(n * n + n - l * l + l, 2), psi0(n + l).square()),
                (
                    rat(-n * n + 2 * n * l - n + 3 * l * l - 3 * l + 1, 2),
                    psi0(n + l),
                ),
                (rat(l * (l - 1), 2), psi0(l).square()),
                (rat(-(3 * l * l - 3 * l + 1), 2), psi0(l)),
                (rat(n * (n - 6 * l + 3), 4), one()),
            ]
        }
        A6 => {
            let (n, l) = (p1, p2);
            vec![
                (
                    rat(2 * n.pow(3) + 3 * n * n + n + 2 * l.pow(3) - 3 * l * l + l, 6),
                    psi0(n + l).square(),
                ),
                (
                    rat(
                        -(4 * n.pow(3) - 6 * n * n * l + 3 * n * n + 12 * n * l * l
                            - 12 * n * l
                            - n
                            + 22 * l.pow(3)
                            - 33 * l * l
                            + 17 * l
                            - 3),
                        18,
                    ),
                    psi0(n + l),
                ),
                (rat(-l * (2 * l * l - 3 * l + 1), 6), psi0(l).square()),
                (
                    rat(22 * l.pow(3) - 33 * l * l + 17 * l - 3, 18),
                    psi0(l),
                ),
                (
                    rat(
                        n * (8 * n * n - 30 * n * l + 15 * n + 132 * l * l - 132 * l + 25),
                        108,
                    ),
                    one(),
                ),
            ]
        }
        A7 => {
            let (n, l) = (p1, p2);
            vec![
                (rat(n + l, 1), psi1(n + l)),
                (rat(-l, 1), psi1(l)),
                (rat(1, 1), psi0(n + l)),
                (rat(-1, 1), psi0(l)),
            ]
        }
        A8 => {
            let (n, l) = (p1, p2);
            vec![
                (rat(n * n + n - l * l + l, 2), psi1(n + l)),
                (rat(l * (l - 1), 2), psi1(l)),
                (rat(-(2 * l - 1), 2), psi0(n + l)),
                (rat(2 * l - 1, 2), psi0(l)),
                (rat(n, 2), one()),
            ]
        }
        A9 => {
            let (n, l) = (p1, p2);
            vec![
                (
                    rat(2 * n.pow(3) + 3 * n * n + n + 2 * l.pow(3) - 3 * l * l + l, 6),
                    psi1(n + l),
                ),
                (rat(-l * (2 * l * l - 3 * l + 1), 6), psi1(l)),
                (rat(6 * l * l - 6 * l + 1, 6), psi0(n + l)),
                (rat(-(6 * l * l - 6 * l + 1), 6), psi0(l)),
                (rat(n * (n - 4 * l + 2), 6), one()),
            ]
        }
        A10 => {
            let (m, n) = (p1, p2);
            vec![(
                fact_ratio(n - 1, m - 1) * rat(n, n - m + 1),
                one(),
            )]
        }
        A11 => {
            let (m, n) = (p1, p2);
            vec![(
                fact_ratio(n, m),
                &psi0(n + 1) - &psi0(n - m + 1),
            )]
        }
        A12 | Hyp4F3 => {
            // the 4F3 byproduct is the same closed form scaled by
            // (n-1)!/(m-1)!; both sides carry the scale, so the term list
            // coincides with A12's
            let (m, n) = (p1, p2);
            let sq_diff = &(&psi1(n - m + 1) - &psi1(n + 1))
                + &(&psi0(n - m + 1).square() - &psi0(n + 1).square());
            let mixed = &psi0(n - m)
                * &(&(&psi0(n + 1) - &psi0(m + 1)) - &(&psi0(n - m + 1) - &psi0(1)));
            vec![
                (fact_ratio(n, m), residual_sum(m, n)),
                (fact_ratio(n, m) * rat(1, 2), sq_diff),
                (fact_ratio(n, m), mixed),
            ]
        }
        RecS => {
            let (m, n) = (p1, p2);
            vec![
                (fact_ratio(n - 1, m), SymExpr::one()),
                (
                    rat(n, m),
                    SymExpr::from_rat(s_sum(m - 1, n - 1)),
                ),
            ]
        }
        RecT => {
            let (m, n) = (p1, p2);
            vec![
                (
                    fact_ratio(n - 1, m) * rat(n - m, m),
                    &psi0(n) - &psi0(n - m),
                ),
                (
                    rat(n, m),
                    SymExpr::from_rat(t_sum(m - 1, n - 1)),
                ),
            ]
        }
        Milgram => {
            let (m, n) = (p1, p2);
            let block = &(&psi1(n + 1) - &psi1(n - m + 1))
                + &(&psi0(n + 1).square() - &psi0(n - m + 1).square());
            vec![(rat(1, 2), block)]
        }
    }
}

/// Number of terms in the identity's closed form (parameter independent).
pub fn term_count(id: IdentityId) -> usize {
    use IdentityId::*;
    match id {
        A1 | A2 | A3 | A12 | Hyp4F3 => 3,
        A4 | A5 | A6 | A8 | A9 => 5,
        A7 => 4,
        A10 | Milgram => 1,
        A11 => 1,
        RecS | RecT => 2,
    }
}

fn assemble(terms: &[(Rat, SymExpr)]) -> SymExpr {
    let mut acc = SymExpr::zero();
    for (c, b) in terms {
        acc = &acc + &b.scale(c);
    }
    acc
}

fn check_inner(id: IdentityId, p1: i64, p2: i64, perturb: Option<usize>) -> Result<IdentityCheckResult> {
    if !id.valid(p1, p2) {
        return Err(Error::Domain {
            what: "identity check",
            requirement: "parameters inside the identity's validity domain",
            got: format!("{id} at ({p1}, {p2})"),
        });
    }
    let mut terms = rhs_terms(id, p1, p2);
    if let Some(idx) = perturb {
        let (c, _) = &mut terms[idx];
        *c += rat(1, 1);
    }
    let lhs = lhs(id, p1, p2);
    let rhs = assemble(&terms);
    let equal = lhs == rhs;
    Ok(IdentityCheckResult {
        id,
        params: (p1, p2),
        lhs,
        rhs,
        equal,
    })
}

/// Exact check of one identity instance.
pub fn check(id: IdentityId, p1: i64, p2: i64) -> Result<IdentityCheckResult> {
    check_inner(id, p1, p2, None)
}

/// Same check with `+1` added to the `term_idx`-th closed-form coefficient;
/// used to confirm the checks are not vacuous.
pub fn check_perturbed(
    id: IdentityId,
    p1: i64,
    p2: i64,
    term_idx: usize,
) -> Result<IdentityCheckResult> {
    check_inner(id, p1, p2, Some(term_idx))
}

/// Every valid instance of `id` with parameters up to `max`, in parameter
/// order.
pub fn sweep_identity(id: IdentityId, max: i64) -> Vec<IdentityCheckResult> {
    let mut out = Vec::new();
    for p1 in 1..=max {
        for p2 in 1..=max {
            if id.valid(p1, p2) {
                out.push(check(id, p1, p2).expect("validity checked"));
            }
        }
    }
    out
}

/// Exhaustive sweep of every identity up to `max` in both parameters.
pub fn sweep_all(max: i64) -> Vec<IdentityCheckResult> {
    ALL_IDENTITIES
        .iter()
        .flat_map(|&id| sweep_identity(id, max))
        .collect()
}
