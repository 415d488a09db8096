//! One Monte Carlo draw: Ginibre matrix, Wishart spectrum, fixed-trace
//! spectrum, and the two entropies.

use crate::dims::Dims;
use crate::error::Result;
use crate::montecarlo::eigen::hermitian_eigenvalues;
use crate::montecarlo::rng::standard_complex;
use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;

/// One draw from the coupled Wishart / fixed-trace ensembles.
#[derive(Debug, Clone)]
pub struct SpectralSample {
    /// Wishart eigenvalues, descending.
    pub theta: Vec<f64>,
    /// Trace `r = sum theta`.
    pub r: f64,
    /// Fixed-trace eigenvalues `theta / r`, descending.
    pub lambda: Vec<f64>,
    /// Entanglement entropy `S = -sum lambda ln lambda`.
    pub s: f64,
    /// Induced entropy `T = sum theta ln theta`.
    pub t: f64,
}

/// `m x n` matrix of i.i.d. standard complex Gaussians (`E|Y_ij|^2 = 1`),
/// row-major.
pub fn sample_ginibre(dims: Dims, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let count = (dims.m() * dims.n()) as usize;
    (0..count).map(|_| standard_complex(rng)).collect()
}

/// Hermitian Gram matrix `Y Y^*` of a row-major `m x n` matrix.
fn gram(dims: Dims, y: &[Complex64]) -> Vec<Complex64> {
    let m = dims.m() as usize;
    let n = dims.n() as usize;
    let mut w = vec![Complex64::new(0.0, 0.0); m * m];
    for i in 0..m {
        for j in i..m {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                acc += y[i * n + k] * y[j * n + k].conj();
            }
            w[i * m + j] = acc;
            w[j * m + i] = acc.conj();
        }
    }
    for i in 0..m {
        w[i * m + i] = Complex64::new(w[i * m + i].re, 0.0);
    }
    w
}

fn x_ln_x(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

/// Draw one spectral sample: eigenvalues of `Y Y^*`, their trace, the
/// normalized spectrum, and both entropies.
pub fn draw_sample(dims: Dims, rng: &mut ChaCha8Rng) -> Result<SpectralSample> {
    let y = sample_ginibre(dims, rng);
    let w = gram(dims, &y);
    let m = dims.m() as usize;
    let theta: Vec<f64> = hermitian_eigenvalues(m, &w)?
        .into_iter()
        .map(|v| v.max(0.0))
        .collect();
    let r: f64 = theta.iter().sum();
    let lambda: Vec<f64> = theta.iter().map(|&v| v / r).collect();
    let s: f64 = -lambda.iter().map(|&v| x_ln_x(v)).sum::<f64>();
    let t: f64 = theta.iter().map(|&v| x_ln_x(v)).sum();
    Ok(SpectralSample {
        theta,
        r,
        lambda,
        s,
        t,
    })
}

impl SpectralSample {
    /// `|sum lambda - 1|`.
    pub fn unit_trace_deviation(&self) -> f64 {
        (self.lambda.iter().sum::<f64>() - 1.0).abs()
    }

    /// `|S - (ln r - T / r)|`, the per-sample relation between the two
    /// entropies.
    pub fn identity_deviation(&self) -> f64 {
        (self.s - (self.r.ln() - self.t / self.r)).abs()
    }
}
