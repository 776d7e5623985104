//! Seeded randomness.
//!
//! Every random stream is ChaCha8 keyed by a `u64` seed, with an optional
//! stream number for independent sub-streams (one per Monte-Carlo trial).
//! Sampling helpers below consume raw `u64` words only, so a given seed
//! yields the same values on every platform and pointer width.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn seeded_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform draw from `[0, 1)` with 53 bits of resolution.
pub(crate) fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform integer in `0..bound` (unbiased, Lemire's method).
pub(crate) fn below(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    assert!(bound > 0, "empty range");
    let bound = bound as u64;
    let threshold = bound.wrapping_neg() % bound;
    loop {
        let wide = u128::from(rng.next_u64()) * u128::from(bound);
        if (wide as u64) >= threshold {
            return (wide >> 64) as usize;
        }
    }
}

/// Fisher–Yates shuffle driven by [`below`].
pub(crate) fn shuffle<T>(rng: &mut ChaCha8Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = below(rng, i + 1);
        items.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn below_stays_in_range() {
        let mut rng = seeded(3);
        for bound in 1..50 {
            for _ in 0..20 {
                assert!(below(&mut rng, bound) < bound);
            }
        }
    }

    #[test]
    fn streams_are_independent_and_replayable() {
        let a: Vec<u64> = (0..4).map(|_| seeded_stream(9, 0).next_u64()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        assert_ne!(
            seeded_stream(9, 0).next_u64(),
            seeded_stream(9, 1).next_u64()
        );
    }

    #[test]
    fn unit_is_half_open() {
        let mut rng = seeded(0);
        for _ in 0..1000 {
            let u = unit(&mut rng);
            assert!((0.0..1.0).contains(&u));
        }
    }
}
