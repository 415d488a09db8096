//! JSON report building blocks shared by the subcommands.

use entropy_moments::SymExpr;
use serde::ser::Error as _;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// Exit codes: 0 pass, 1 verification failure, 2 usage error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// An `f64` serialized as a raw JSON number with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F17(pub f64);

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(S::Error::custom("non-finite value in report"));
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(S::Error::custom)?;
        raw.serialize(serializer)
    }
}

/// One monomial of an exact value: coefficient of `gamma^i (pi^2)^j`.
#[derive(Debug, Serialize)]
pub struct ExactTerm {
    pub gamma_deg: u8,
    pub pi2_deg: u8,
    pub coeff: String,
}

/// An exact value as both a coefficient map and a rendered string.
#[derive(Debug, Serialize)]
pub struct ExactValue {
    pub terms: Vec<ExactTerm>,
    pub rendered: String,
}

impl ExactValue {
    pub fn from_expr(e: &SymExpr) -> Self {
        Self {
            terms: e
                .terms()
                .map(|(&(i, j), c)| ExactTerm {
                    gamma_deg: i,
                    pi2_deg: j,
                    coeff: c.to_string(),
                })
                .collect(),
            rendered: e.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub all_passed: bool,
}

impl Summary {
    pub fn new(checks: usize, failed: usize) -> Self {
        Self {
            checks,
            passed: checks - failed,
            failed,
            all_passed: failed == 0,
        }
    }
}

/// Top-level report envelope: `{version, config, results, summary}`.
#[derive(Debug, Serialize)]
pub struct Report<C: Serialize, R: Serialize> {
    pub version: &'static str,
    pub config: C,
    pub results: R,
    pub summary: Summary,
}

pub fn render<C: Serialize, R: Serialize>(report: &Report<C, R>) -> String {
    serde_json::to_string_pretty(report).expect("report serialization")
}
