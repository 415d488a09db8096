//! Exact and statistical machinery for the moments of the von Neumann entropy
//! of random bipartite pure states.
//!
//! A pure state on an `m x n` bipartite system (`m <= n`) has reduced-density-matrix
//! eigenvalues distributed as the fixed-trace Laguerre ensemble. This crate computes
//! the closed-form mean and variance of the entanglement entropy
//! `S = -sum λ_i ln λ_i` exactly, as polynomials in Euler's constant and pi^2 with
//! arbitrary-precision rational coefficients, and cross-checks every ingredient three
//! independent ways:
//!
//! * exact symbolic evaluation of the closed forms ([`moments`]),
//! * exact monomial-integration and floating-point quadrature oracles for the
//!   correlation-kernel integrals behind them ([`laguerre`]),
//! * Monte Carlo sampling of the Wishart / fixed-trace ensembles ([`montecarlo`]),
//!
//! plus exact instance verification of the finite-sum identities used along the
//! way ([`identities`]).

#![forbid(unsafe_code)]

pub mod dims;
pub mod error;
pub mod exactnum;
pub mod identities;
pub mod laguerre;
pub mod moments;
pub mod montecarlo;
pub mod polygamma;
pub mod quad;

pub use dims::Dims;
pub use error::{Error, Result};
pub use exactnum::rational::Rat;
pub use exactnum::symexpr::SymExpr;
