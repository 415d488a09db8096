//! Deterministic parallel moment estimation.
//!
//! Samples are partitioned into fixed-size chunks; chunk `c` draws from the
//! substream keyed by `(seed, c)` and accumulates its own statistics, and the
//! per-chunk results are merged in chunk order. The outcome is bitwise
//! identical for any thread count.

use crate::dims::Dims;
use crate::error::Result;
use crate::montecarlo::rng::chunk_rng;
use crate::montecarlo::sample::draw_sample;
use rayon::prelude::*;

const CHUNK_SIZE: u64 = 8192;

#[derive(Debug, Clone, Copy, Default)]
struct ChunkStats {
    count: u64,
    sum_s: f64,
    sum_s2: f64,
    sum_s3: f64,
    sum_s4: f64,
    sum_t: f64,
    sum_t2: f64,
    sum_t4: f64,
    sum_r: f64,
    sum_r2: f64,
    sum_r3: f64,
    sum_r4: f64,
    sum_rs: f64,
    max_identity_dev: f64,
    max_unit_trace_dev: f64,
    min_s: f64,
    max_s: f64,
}

impl ChunkStats {
    fn new() -> Self {
        Self {
            min_s: f64::INFINITY,
            max_s: f64::NEG_INFINITY,
            ..Self::default()
        }
    }

    fn record(&mut self, s: f64, t: f64, r: f64, identity_dev: f64, trace_dev: f64) {
        self.count += 1;
        self.sum_s += s;
        self.sum_s2 += s * s;
        self.sum_s3 += s * s * s;
        self.sum_s4 += s * s * s * s;
        self.sum_t += t;
        self.sum_t2 += t * t;
        self.sum_t4 += (t * t) * (t * t);
        self.sum_r += r;
        self.sum_r2 += r * r;
        self.sum_r3 += r * r * r;
        self.sum_r4 += (r * r) * (r * r);
        self.sum_rs += r * s;
        self.max_identity_dev = self.max_identity_dev.max(identity_dev);
        self.max_unit_trace_dev = self.max_unit_trace_dev.max(trace_dev);
        self.min_s = self.min_s.min(s);
        self.max_s = self.max_s.max(s);
    }

    fn merge(&mut self, o: &ChunkStats) {
        self.count += o.count;
        self.sum_s += o.sum_s;
        self.sum_s2 += o.sum_s2;
        self.sum_s3 += o.sum_s3;
        self.sum_s4 += o.sum_s4;
        self.sum_t += o.sum_t;
        self.sum_t2 += o.sum_t2;
        self.sum_t4 += o.sum_t4;
        self.sum_r += o.sum_r;
        self.sum_r2 += o.sum_r2;
        self.sum_r3 += o.sum_r3;
        self.sum_r4 += o.sum_r4;
        self.sum_rs += o.sum_rs;
        self.max_identity_dev = self.max_identity_dev.max(o.max_identity_dev);
        self.max_unit_trace_dev = self.max_unit_trace_dev.max(o.max_unit_trace_dev);
        self.min_s = self.min_s.min(o.min_s);
        self.max_s = self.max_s.max(o.max_s);
    }
}

/// A point estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub std_error: f64,
}

/// Moment estimates with standard errors and per-sample invariant extrema.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimatorReport {
    pub dims: Dims,
    pub samples: u64,
    pub seed: u64,
    /// Mean and variance of the entanglement entropy (fixed-trace ensemble).
    pub mean_s: Estimate,
    pub var_s: Estimate,
    /// First and second moments of the induced entropy (Laguerre ensemble).
    pub mean_t: Estimate,
    pub mean_t2: Estimate,
    /// Trace moments; both approach `m n` for the unit-scale Wishart trace.
    pub mean_r: Estimate,
    pub var_r: Estimate,
    /// Sample correlation between trace and entropy (zero in distribution).
    pub corr_r_s: f64,
    /// Worst per-sample deviation of `S = ln r - T/r`.
    pub max_identity_dev: f64,
    /// Worst per-sample deviation of `sum lambda = 1`.
    pub max_unit_trace_dev: f64,
    pub min_s: f64,
    pub max_s: f64,
}

fn run_chunk(dims: Dims, seed: u64, chunk: u64, count: u64) -> Result<ChunkStats> {
    let mut rng = chunk_rng(seed, chunk);
    let mut stats = ChunkStats::new();
    for _ in 0..count {
        let sample = draw_sample(dims, &mut rng)?;
        stats.record(
            sample.s,
            sample.t,
            sample.r,
            sample.identity_deviation(),
            sample.unit_trace_deviation(),
        );
    }
    Ok(stats)
}

/// Estimate all reported moments from `samples` draws (`samples >= 1000`).
/// `threads = 0` uses the rayon default; any value yields the identical
/// report.
pub fn estimate_moments(dims: Dims, samples: u64, seed: u64, threads: usize) -> Result<EstimatorReport> {
    assert!(samples >= 1000, "need at least 1000 samples");
    let chunks: Vec<(u64, u64)> = (0..samples.div_ceil(CHUNK_SIZE))
        .map(|c| (c, CHUNK_SIZE.min(samples - c * CHUNK_SIZE)))
        .collect();

    let partials: Result<Vec<ChunkStats>> = if threads == 1 {
        chunks
            .iter()
            .map(|&(c, count)| run_chunk(dims, seed, c, count))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            chunks
                .par_iter()
                .map(|&(c, count)| run_chunk(dims, seed, c, count))
                .collect()
        })
    };

    let mut total = ChunkStats::new();
    for p in &partials? {
        total.merge(p);
    }

    let n = total.count as f64;
    let mean_s = total.sum_s / n;
    let mean_t = total.sum_t / n;
    let mean_t2 = total.sum_t2 / n;
    let mean_r = total.sum_r / n;

    let central2 = |sum2: f64, mean: f64| (sum2 / n - mean * mean).max(0.0);
    let m2_s = central2(total.sum_s2, mean_s);
    let m2_t = central2(total.sum_t2, mean_t);
    let m2_t2 = central2(total.sum_t4, mean_t2);
    let m2_r = central2(total.sum_r2, mean_r);

    // fourth central moments for the variance standard errors (delta method)
    let central4 = |s1: f64, s2: f64, s3: f64, s4: f64, mean: f64| {
        (s4 - 4.0 * mean * s3 + 6.0 * mean * mean * s2 - 4.0 * mean.powi(3) * s1) / n
            + mean.powi(4)
    };
    let m4_s = central4(total.sum_s, total.sum_s2, total.sum_s3, total.sum_s4, mean_s);
    let m4_r = central4(total.sum_r, total.sum_r2, total.sum_r3, total.sum_r4, mean_r);

    let bessel = n / (n - 1.0);
    let var_s = m2_s * bessel;
    let var_r = m2_r * bessel;

    let cov_rs = total.sum_rs / n - mean_r * mean_s;
    let corr_r_s = if m2_r > 0.0 && m2_s > 0.0 {
        cov_rs / (m2_r * m2_s).sqrt()
    } else {
        0.0
    };

    let se = |m2: f64| (m2 / n).sqrt();
    let se_var = |m4: f64, m2: f64| ((m4 - m2 * m2).max(0.0) / n).sqrt();

    Ok(EstimatorReport {
        dims,
        samples,
        seed,
        mean_s: Estimate {
            value: mean_s,
            std_error: se(m2_s),
        },
        var_s: Estimate {
            value: var_s,
            std_error: se_var(m4_s, m2_s),
        },
        mean_t: Estimate {
            value: mean_t,
            std_error: se(m2_t),
        },
        mean_t2: Estimate {
            value: mean_t2,
            std_error: se(m2_t2),
        },
        mean_r: Estimate {
            value: mean_r,
            std_error: se(m2_r),
        },
        var_r: Estimate {
            value: var_r,
            std_error: se_var(m4_r, m2_r),
        },
        corr_r_s,
        max_identity_dev: total.max_identity_dev,
        max_unit_trace_dev: total.max_unit_trace_dev,
        min_s: total.min_s,
        max_s: total.max_s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::symexpr::sym_eval;
    use crate::moments;

    fn dims(m: u32, n: u32) -> Dims {
        Dims::new(m, n).unwrap()
    }

    #[test]
    fn identical_reports_across_thread_counts() {
        let d = dims(2, 3);
        let a = estimate_moments(d, 20_000, 1234, 1).unwrap();
        let b = estimate_moments(d, 20_000, 1234, 4).unwrap();
        let c = estimate_moments(d, 20_000, 1234, 0).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn estimates_track_closed_forms_at_modest_sample_count() {
        let d = dims(2, 2);
        let rep = estimate_moments(d, 200_000, 42, 0).unwrap();
        let page = sym_eval(&moments::page_mean(d), 20);
        let var = sym_eval(&moments::entropy_variance(d), 20);
        assert!((rep.mean_s.value - page).abs() < 4.0 * rep.mean_s.std_error);
        assert!((rep.var_s.value - var).abs() < 5.0 * rep.var_s.std_error);
        assert!((rep.mean_r.value - 4.0).abs() < 4.0 * rep.mean_r.std_error);
        assert!((rep.var_r.value - 4.0).abs() < 5.0 * rep.var_r.std_error);
        assert!(rep.corr_r_s.abs() < 3.0 / (rep.samples as f64).sqrt());
        assert!(rep.max_identity_dev <= 1e-10);
        assert!(rep.max_unit_trace_dev <= 1e-12);
    }

    #[test]
    fn scalar_case_has_zero_entropy_variance() {
        let rep = estimate_moments(dims(1, 5), 10_000, 7, 0).unwrap();
        assert_eq!(rep.mean_s.value, 0.0);
        assert_eq!(rep.var_s.value, 0.0);
        assert_eq!(rep.corr_r_s, 0.0);
    }
}
