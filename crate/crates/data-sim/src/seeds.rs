//! Deterministic seed derivation for parallel sampling.
//!
//! Every sampler is a pure function of its inputs and one 64-bit seed.
//! Concurrent runs must therefore draw from distinct derived seeds rather
//! than a shared generator; this module derives them by hashing the master
//! seed together with a path of purpose tags, so any (master, path) pair
//! maps to one stable stream regardless of scheduling order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use sha2::{Digest, Sha256};

/// Derives a child seed from a master seed and a tag path, e.g.
/// `derive_seed(master, &["data", "B", "1000000", "3"])`. Different paths
/// give statistically independent seeds; the same path always gives the
/// same seed.
pub fn derive_seed(master: u64, path: &[&str]) -> u64 {
    let mut hasher = Sha256::new();
    hasher.update(master.to_le_bytes());
    for tag in path {
        hasher.update([0x1f]);
        hasher.update(tag.as_bytes());
    }
    let digest = hasher.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("digest has at least 8 bytes"))
}

/// A counter-based generator for the given seed; small, fast and with
/// independent streams for distinct seeds.
pub fn rng_from(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}
