//! Composite Gauss-Legendre quadrature on `[0, R]`.
//!
//! The integrands here carry `ln x` and `ln^2 x` factors, which degrade plain
//! Gauss-Laguerre convergence, so panels are used instead: a geometrically
//! graded base mesh toward 0 absorbs the logarithmic endpoint behavior (and
//! the half-integer powers the correlation kernel produces for odd `n - m`),
//! and each refinement level splits every panel in two until two successive
//! refinements agree. Summation order is fixed, so results are deterministic.

use crate::error::{Error, Result};

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes via Newton iteration on the Legendre recurrence.
    pub fn new(order: usize) -> Self {
        assert!(order >= 2);
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Append the rule mapped onto `[a, b]` to the node/weight buffers.
    fn push_panel(&self, a: f64, b: f64, xs: &mut Vec<f64>, ws: &mut Vec<f64>) {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            xs.push(mid + half * x);
            ws.push(half * w);
        }
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Number of geometric halvings toward 0 in the base mesh.
const GRADING_DEPTH: u32 = 40;

/// Nodes and weights of the graded composite rule on `[0, upper]` at the
/// given refinement level (each level splits every base panel in two).
pub fn graded_mesh(upper: f64, level: u32, rule: &GaussLegendre) -> (Vec<f64>, Vec<f64>) {
    assert!(upper > 0.0);
    let mut breaks = Vec::with_capacity(GRADING_DEPTH as usize + 2);
    breaks.push(0.0);
    for j in (0..=GRADING_DEPTH).rev() {
        breaks.push(upper * (0.5f64).powi(j as i32));
    }
    let splits = 1usize << level;
    let count = (breaks.len() - 1) * splits * rule.order();
    let mut xs = Vec::with_capacity(count);
    let mut ws = Vec::with_capacity(count);
    for pair in breaks.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let step = (b - a) / splits as f64;
        for s in 0..splits {
            let lo = a + step * s as f64;
            rule.push_panel(lo, lo + step, &mut xs, &mut ws);
        }
    }
    (xs, ws)
}

/// Outcome of an adaptive composite integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadEstimate {
    pub value: f64,
    /// Last successive-refinement difference.
    pub error_estimate: f64,
    pub converged: bool,
    pub levels_used: u32,
}

pub const DEFAULT_TOL: f64 = 1e-9;

/// Integrate `f` over `[0, upper]`, doubling the panel count until two
/// successive refinements differ by less than `tol` (relative).
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    upper: f64,
    tol: f64,
    max_level: u32,
) -> QuadEstimate {
    let rule = GaussLegendre::new(32);
    let mut prev = f64::NAN;
    let mut diff = f64::INFINITY;
    for level in 0..=max_level {
        let (xs, ws) = graded_mesh(upper, level, &rule);
        let mut acc = 0.0;
        for (x, w) in xs.iter().zip(&ws) {
            acc += w * f(*x);
        }
        if level > 0 {
            diff = (acc - prev).abs();
            if diff <= tol * acc.abs().max(1.0) {
                return QuadEstimate {
                    value: acc,
                    error_estimate: diff,
                    converged: true,
                    levels_used: level,
                };
            }
        }
        prev = acc;
    }
    QuadEstimate {
        value: prev,
        error_estimate: diff,
        converged: false,
        levels_used: max_level,
    }
}

/// [`integrate`], promoting non-convergence to an error.
pub fn integrate_checked<F: Fn(f64) -> f64>(
    f: F,
    upper: f64,
    tol: f64,
    max_level: u32,
) -> Result<QuadEstimate> {
    let est = integrate(f, upper, tol, max_level);
    if est.converged {
        Ok(est)
    } else {
        Err(Error::QuadratureNoConvergence {
            estimate: est.error_estimate,
            tolerance: tol,
        })
    }
}
