//! Seeded random streams.
//!
//! Every stochastic operation in the crate derives its randomness from a
//! `(seed, stream)` pair so that independent concerns (batch indices, time
//! draws, noise draws, ...) consume independent streams. Two runs that share
//! a seed therefore produce identical draws for each concern even when one
//! run consumes fewer streams than the other (e.g. paired training never
//! touches the noise stream that random-coupling training uses).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Stream ids used across the crate. Streams are independent per seed.
pub(crate) mod stream {
    pub const INIT: u64 = 0;
    pub const INDEX: u64 = 1;
    pub const TIME: u64 = 2;
    pub const NOISE: u64 = 3;
    pub const DATA: u64 = 4;
    pub const PAIR_NOISE: u64 = 5;
    pub const METRIC_NOISE: u64 = 6;
    pub const PROJECTION: u64 = 7;
    pub const SEGMENT: u64 = 8;
}

/// A ChaCha generator for the given seed and stream id.
pub(crate) fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Fill `out` with independent standard-normal draws.
pub(crate) fn fill_standard_normal(rng: &mut impl rand::Rng, out: &mut [f64]) {
    for v in out.iter_mut() {
        *v = StandardNormal.sample(rng);
    }
}
