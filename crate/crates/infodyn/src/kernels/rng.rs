//! Seeded, stream-addressable random number generation.
//!
//! Every stochastic task in the crate owns an `RngHandle` identified by
//! `(seed, stream)`. Identical handles produce identical draw sequences, so
//! ensembles and surrogate loops are reproducible regardless of how work is
//! scheduled across threads.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// Identifier of an independent random stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RngHandle {
    /// Master seed shared by a whole run.
    pub seed: u64,
    /// Stream id separating tasks within the run.
    pub stream: u64,
}

impl RngHandle {
    pub fn new(seed: u64, stream: u64) -> Self {
        RngHandle { seed, stream }
    }

    /// Instantiate the generator for this stream.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }

    /// Child handle for a sub-task, keyed by arbitrary tags.
    pub fn derive(&self, tags: &[u64]) -> RngHandle {
        let mut s = self.stream;
        for &t in tags {
            s = mix64(s ^ mix64(t));
        }
        RngHandle { seed: self.seed, stream: s }
    }
}

/// SplitMix64 finalizer; a cheap, well-mixed 64-bit hash for stream ids.
pub fn mix64(v: u64) -> u64 {
    let mut z = v.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Standard sampling distributions used by the generative models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardDist {
    /// N(0, 1)
    Normal,
    /// Chi-square with one degree of freedom (a squared standard normal).
    ChiSquare1,
}

/// Draw `n` values from `dist` on the handle's stream.
pub fn sample_standard(handle: &RngHandle, dist: StandardDist, n: usize) -> Vec<f64> {
    let mut rng = handle.rng();
    (0..n)
        .map(|_| match dist {
            StandardDist::Normal => rng.sample(StandardNormal),
            StandardDist::ChiSquare1 => {
                let z: f64 = rng.sample(StandardNormal);
                z * z
            }
        })
        .collect()
}

/// Uniform draw in `[lo, hi]` (inclusive). Convenience for surrogate offsets.
pub fn uniform_usize(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}
