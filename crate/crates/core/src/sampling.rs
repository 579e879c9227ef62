//! Seeded random rational data for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{frac, Scalar, Subspace};

pub type Sampler = ChaCha8Rng;

pub fn sampler(seed: u64) -> Sampler {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `|p| <= 3` and `1 <= q <= 2`.
pub fn small_scalar(rng: &mut Sampler) -> Scalar {
    frac(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

pub fn nonzero_scalar(rng: &mut Sampler) -> Scalar {
    let p = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    frac(p, rng.gen_range(1..=2))
}

pub fn random_coords(rng: &mut Sampler, len: usize) -> Vec<Scalar> {
    (0..len).map(|_| small_scalar(rng)).collect()
}

/// A random vector of `space` in ambient coordinates.
pub fn random_element(rng: &mut Sampler, space: &Subspace) -> Vec<Scalar> {
    let coords = random_coords(rng, space.dim());
    space.combine(&coords)
}
