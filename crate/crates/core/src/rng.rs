//! Seed derivation. Every random stream in the crate is a
//! `Xoshiro256PlusPlus` keyed by `(seed, stream)` so that work split across
//! levels, trials or workers draws the same numbers regardless of schedule.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

pub type StreamRng = Xoshiro256PlusPlus;

pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    splitmix64(seed ^ splitmix64(stream.wrapping_add(0x6a09_e667_f3bc_c909)))
}

pub fn stream_rng(seed: u64, stream: u64) -> StreamRng {
    StreamRng::seed_from_u64(derive_seed(seed, stream))
}

/// Draw a fresh base seed from a caller-supplied generator.
pub(crate) fn fork<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    rng.random()
}
