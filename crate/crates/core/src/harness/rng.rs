//! SplitMix64, the seeded generator behind every random instance.
//!
//! The generator keeps a 64-bit counter `state`. Each draw adds the constant
//! `0x9E37_79B9_7F4A_7C15` to the counter and returns the mixed value
//!
//! ```text
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58_476D_1CE4_E5B9
//! z = (z ^ (z >> 27)) * 0x94D0_49BB_1331_11EB
//! z ^ (z >> 31)
//! ```
//!
//! with wrapping multiplication (the `rand_xoshiro` implementation). Reals in
//! `[0, 1)` take the top 53 bits, `(z >> 11) · 2⁻⁵³`; integers in a range
//! are drawn by rejection from the full 64-bit output. Instance `i` of a run
//! with seed `s` draws from a generator whose initial counter is `f + i`,
//! where `f` is the first output of the generator started at `s`, so any
//! instance can be regenerated on its own.

use rand_xoshiro::rand_core::{Rng, SeedableRng};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    inner: rand_xoshiro::SplitMix64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 {
            inner: rand_xoshiro::SplitMix64::seed_from_u64(seed),
        }
    }

    /// Independent stream for instance `index` of a run seeded with `seed`.
    pub fn for_instance(seed: u64, index: u64) -> Self {
        let first = SplitMix64::new(seed).next_u64();
        SplitMix64::new(first.wrapping_add(index))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in `[lo, hi]`, by rejection so every value is equally
    /// likely.
    pub fn int_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        let zone = u64::MAX - u64::MAX % span;
        loop {
            let x = self.next_u64();
            if x < zone {
                return lo + (x % span) as i64;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    pub fn sign(&mut self) -> f64 {
        if self.coin() {
            1.0
        } else {
            -1.0
        }
    }

    /// `k` distinct integers from `[lo, hi]`, ascending.
    pub fn distinct_sorted(&mut self, lo: i64, hi: i64, k: usize) -> Vec<i64> {
        let mut pool: Vec<i64> = (lo..=hi).collect();
        assert!(k <= pool.len());
        // partial Fisher-Yates
        for i in 0..k {
            let j = self.int_inclusive(i as i64, pool.len() as i64 - 1) as usize;
            pool.swap(i, j);
        }
        let mut chosen = pool[..k].to_vec();
        chosen.sort_unstable();
        chosen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        // published SplitMix64 outputs for seed 1234567
        let mut g = SplitMix64::new(1234567);
        assert_eq!(g.next_u64(), 6457827717110365317);
        assert_eq!(g.next_u64(), 3203168211198807973);
        assert_eq!(g.next_u64(), 9817491932198370423);
    }

    #[test]
    fn ranges() {
        let mut g = SplitMix64::new(7);
        for _ in 0..1000 {
            let x = g.next_f64();
            assert!((0.0..1.0).contains(&x));
            let k = g.int_inclusive(-3, 4);
            assert!((-3..=4).contains(&k));
        }
        let d = g.distinct_sorted(-10, 10, 21);
        assert_eq!(d, (-10..=10).collect::<Vec<_>>());
    }

    #[test]
    fn instance_streams_are_reproducible() {
        let a: Vec<u64> = (0..4)
            .map(|_| SplitMix64::for_instance(9, 3).next_u64())
            .collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        assert_ne!(
            SplitMix64::for_instance(9, 3).next_u64(),
            SplitMix64::for_instance(9, 4).next_u64()
        );
    }
}
