//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid dimensions: require 1 <= m <= n, got m={m}, n={n}")]
    InvalidDims { m: i64, n: i64 },

    #[error("{what} requires {requirement}, got {got}")]
    Domain {
        what: &'static str,
        requirement: &'static str,
        got: String,
    },

    #[error("degenerate term k={k} in {what}: zero binomial paired with polygamma pole (argument {arg}); use the regularized specialization")]
    DegenerateTerm {
        what: &'static str,
        k: u32,
        arg: i64,
    },

    #[error("polygamma pole at argument {arg} in term k={k} of {what}: identity not applicable")]
    PolygammaPole {
        what: &'static str,
        k: u32,
        arg: i64,
    },

    #[error("unsupported index pattern (s={s}, t={t}); supported: (k,k), (k+1,k), (k+j,k) with j >= 2")]
    UnsupportedIndexPattern { s: u32, t: u32 },

    #[error("matrix is not Hermitian: max |a_ij - conj(a_ji)| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("matrix dimension {n} exceeds the supported maximum {max}")]
    MatrixTooLarge { n: usize, max: usize },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    EigenNoConvergence { sweeps: usize, off_norm: f64 },

    #[error("quadrature did not converge: successive-refinement difference {estimate:e} above tolerance {tolerance:e}")]
    QuadratureNoConvergence { estimate: f64, tolerance: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
