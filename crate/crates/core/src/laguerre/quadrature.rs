//! Floating-point quadrature estimates of the kernel integrals
//! `I_A = int x^2 ln^2 x K(x,x) dx` and
//! `I_B = int int x y ln x ln y K(x,y)^2 dx dy`.

use crate::error::{Error, Result};
use crate::laguerre::kernel::KernelSpec;
use crate::quad::{self, GaussLegendre};

/// A converged quadrature value with its successive-refinement error estimate.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub levels_used: u32,
}

/// Truncation point of the integration domain; the weight `e^{-x}` makes the
/// tail beyond it negligible at double precision.
pub fn domain_upper(spec: &KernelSpec) -> f64 {
    4.0 * f64::from(spec.dims().n()) + 40.0 * f64::from(spec.dims().m()) + 50.0
}

const MAX_DIM: u32 = 8;

fn check_scale(spec: &KernelSpec, what: &'static str) -> Result<()> {
    if spec.dims().n() > MAX_DIM {
        return Err(Error::Domain {
            what,
            requirement: "m <= n <= 8",
            got: spec.dims().to_string(),
        });
    }
    Ok(())
}

/// 1-D quadrature of I_A.
pub fn quadrature_ia(spec: &KernelSpec) -> Result<QuadratureResult> {
    check_scale(spec, "quadrature_ia")?;
    let upper = domain_upper(spec);
    let est = quad::integrate_checked(
        |x| {
            let lx = x.ln();
            x * x * lx * lx * spec.kernel_value(x, x)
        },
        upper,
        quad::DEFAULT_TOL,
        5,
    )?;
    Ok(QuadratureResult {
        value: est.value,
        error_estimate: est.error_estimate,
        levels_used: est.levels_used,
    })
}

/// 2-D tensor-product quadrature of I_B over the same graded panels per axis.
/// The kernel is evaluated through its orthonormal basis so each refinement
/// level costs O(N^2 m) with fixed summation order.
pub fn quadrature_ib(spec: &KernelSpec) -> Result<QuadratureResult> {
    check_scale(spec, "quadrature_ib")?;
    let upper = domain_upper(spec);
    let rule = GaussLegendre::new(12);
    let m = spec.dims().m() as usize;
    let mut prev = f64::NAN;
    let mut diff = f64::INFINITY;
    let max_level = 3;
    for level in 0..=max_level {
        let (xs, ws) = quad::graded_mesh(upper, level, &rule);
        let count = xs.len();
        // g_i = w_i x_i ln x_i, phi laid out basis-major
        let mut g = Vec::with_capacity(count);
        let mut phi = vec![0.0f64; m * count];
        for (i, (&x, &w)) in xs.iter().zip(&ws).enumerate() {
            g.push(w * x * x.ln());
            for (k, v) in spec.weighted_basis(x).into_iter().enumerate() {
                phi[k * count + i] = v;
            }
        }
        let mut acc = 0.0;
        for i in 0..count {
            // diagonal term once, off-diagonal twice by symmetry
            let mut kxx = 0.0;
            for k in 0..m {
                let v = phi[k * count + i];
                kxx += v * v;
            }
            acc += g[i] * g[i] * kxx * kxx;
            let mut row = 0.0;
            for j in 0..i {
                let mut kxy = 0.0;
                for k in 0..m {
                    kxy += phi[k * count + i] * phi[k * count + j];
                }
                row += g[j] * kxy * kxy;
            }
            acc += 2.0 * g[i] * row;
        }
        if level > 0 {
            diff = (acc - prev).abs();
            if diff <= quad::DEFAULT_TOL * acc.abs().max(1.0) {
                return Ok(QuadratureResult {
                    value: acc,
                    error_estimate: diff,
                    levels_used: level,
                });
            }
        }
        prev = acc;
    }
    Err(Error::QuadratureNoConvergence {
        estimate: diff,
        tolerance: quad::DEFAULT_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dims::Dims;

    fn spec(m: u32, n: u32) -> KernelSpec {
        KernelSpec::new(Dims::new(m, n).unwrap())
    }

    #[test]
    fn scalar_case_values() {
        let ia = quadrature_ia(&spec(1, 1)).unwrap();
        assert!((ia.value - 2.492929991902693).abs() < 1e-6);
        let ib = quadrature_ib(&spec(1, 1)).unwrap();
        assert!((ib.value - 0.17874659400465295).abs() < 1e-6);
    }

    #[test]
    fn ib_m1_row_value() {
        // m = 1, n = 3: I_B = (3 psi0(3) + 1)^2
        let p03 = 1.5 - 0.5772156649015329f64;
        let want = (3.0 * p03 + 1.0) * (3.0 * p03 + 1.0);
        let ib = quadrature_ib(&spec(1, 3)).unwrap();
        assert!((ib.value - want).abs() < 1e-6 * want);
    }

    #[test]
    fn desk_scale_guard() {
        assert!(quadrature_ia(&spec(3, 9)).is_err());
    }
}
