//! Seeded random number generation.
//!
//! Every stochastic component in this crate draws from a [`SeededRng`]:
//! a ChaCha8 stream keyed by a 64-bit seed. Batch experiments derive one
//! independent sub-stream per (function, run) pair via [`derive_seed`],
//! so results are reproducible regardless of execution order or the
//! number of worker threads.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic random stream with a recoverable seed.
#[derive(Debug, Clone)]
pub struct SeededRng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent sub-stream for a labelled task (e.g. one run of one
    /// benchmark function). Adding tasks never perturbs the streams of
    /// existing ones.
    pub fn substream(&self, tag: &str, index: u64) -> SeededRng {
        SeededRng::new(derive_seed(self.seed, tag, index))
    }
}

impl RngCore for SeededRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.inner.try_fill_bytes(dest)
    }
}

/// Stable seed derivation: hash (master seed, tag, index) into a new seed.
///
/// Uses FNV-1a over the tag bytes followed by splitmix64 finalization.
/// Implemented by hand so the mapping never changes across Rust or
/// dependency upgrades.
pub fn derive_seed(master: u64, tag: &str, index: u64) -> u64 {
    const FNV_OFFSET: u64 = 0xcbf29ce484222325;
    const FNV_PRIME: u64 = 0x100000001b3;

    let mut h = FNV_OFFSET ^ master;
    for &b in tag.as_bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h ^= index;
    h = h.wrapping_mul(FNV_PRIME);
    splitmix64(h)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
