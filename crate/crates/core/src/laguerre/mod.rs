//! Generalized Laguerre polynomials, the Laguerre-ensemble correlation
//! kernel, the log-weighted orthogonality integrals behind the entropy
//! moments, and two independent oracles (exact monomial integration,
//! floating-point quadrature) for the kernel integrals I_A and I_B.

pub mod kernel;
pub mod oracle;
pub mod poly;
pub mod quadrature;
pub mod schrodinger;

pub use kernel::KernelSpec;
pub use oracle::{oracle_ia, oracle_ib, symbolic_integral_oracle, LogPower};
pub use poly::{laguerre_eval, LaguerrePoly};
pub use quadrature::{quadrature_ia, quadrature_ib, QuadratureResult};
pub use schrodinger::{
    cal_a_regularized, cal_b, schrodinger_a, schrodinger_b, schrodinger_integral, RegularizedPair,
};
