//! Seeded random streams. Every stochastic routine takes a seed and derives
//! independent substreams from it, so results do not depend on call order.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

pub type Rng = ChaCha20Rng;

pub fn seeded(seed: u64) -> Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Stream `id` of the generator seeded with `seed`.
pub fn substream(seed: u64, id: u64) -> Rng {
    let mut r = ChaCha20Rng::seed_from_u64(seed);
    r.set_stream(id);
    r
}
