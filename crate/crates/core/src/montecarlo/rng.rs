//! Deterministic substream random numbers.
//!
//! Each work chunk draws from its own ChaCha stream keyed by `(seed, chunk)`,
//! so results are independent of thread count and scheduling. Normal variates
//! come from Box-Muller over the raw 64-bit output; one uniform pair yields
//! one complex Gaussian entry with `E|z|^2 = 1`.

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// RNG for chunk `chunk` of the run keyed by `seed`.
pub fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

/// Uniform in the open interval (0, 1).
pub fn open01(rng: &mut ChaCha8Rng) -> f64 {
    ((rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9007199254740992.0)
}

/// Standard complex Gaussian with independent real and imaginary parts of
/// variance 1/2, so `|z|^2` is a unit-mean exponential.
pub fn standard_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    let radius = (-open01(rng).ln()).sqrt();
    let angle = 2.0 * std::f64::consts::PI * open01(rng);
    Complex64::new(radius * angle.cos(), radius * angle.sin())
}
