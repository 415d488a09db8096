//! Exact arithmetic: arbitrary-precision rationals and the small symbolic
//! layer (polynomials in Euler's constant and pi^2) in which every closed
//! form of this crate evaluates exactly.

pub mod rational;
pub mod symexpr;

pub use rational::{binom, binom_gen, factorial, factorial_rat, rat, rat_arith, Rat, RatOp};
pub use symexpr::SymExpr;
