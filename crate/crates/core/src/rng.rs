//! Deterministic, stream-splittable randomness.
//!
//! All samplers take an explicit [`RngState`]. A state is fully determined
//! by `(seed, stream)`, so parallel replicates get bitwise-reproducible
//! results by deriving one stream per work item from a master seed.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::float;

/// Counter-based generator state: ChaCha8 keyed by `seed` on stream `stream`.
///
/// Identical `(seed, stream)` pairs produce identical draw sequences on
/// every platform. ChaCha supports 2^64 independent streams.
#[derive(Debug, Clone)]
pub struct RngState {
    rng: ChaCha8Rng,
    seed: u64,
    stream: u64,
}

impl RngState {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        RngState { rng, seed, stream }
    }

    /// A fresh state on a sibling stream of the same seed.
    pub fn substream(&self, stream: u64) -> Self {
        RngState::new(self.seed, stream)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    #[inline]
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.uniform() < p
    }

    /// Uniform index in `0..n` (rejection sampling, no modulo bias).
    #[inline]
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        let n = n as u64;
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let x = self.next_u64();
            if x < zone {
                return (x % n) as usize;
            }
        }
    }

    /// Poisson draw by Knuth's product method; fine for the small means
    /// used throughout (offspring rates, edge intensities).
    pub fn poisson(&mut self, mean: f64) -> usize {
        debug_assert!((0.0..700.0).contains(&mean), "poisson mean out of range");
        if mean == 0.0 {
            return 0;
        }
        let limit = float::exp(-mean);
        let mut count = 0usize;
        let mut prod = self.uniform();
        while prod > limit {
            count += 1;
            prod *= self.uniform();
        }
        count
    }

    /// Number of failures before the first success of a Bernoulli(`q`) trial:
    /// `P{skip = j} = (1-q)^j q`. Used for geometric skip-sampling.
    #[inline]
    pub fn geometric_skip(&mut self, q: f64) -> u64 {
        debug_assert!(q > 0.0 && q < 1.0);
        let u = self.uniform();
        // 1 - u is in (0, 1]; ln of it is finite and <= 0.
        let skip = float::ln(1.0 - u) / float::ln(1.0 - q);
        if skip >= u64::MAX as f64 {
            u64::MAX
        } else {
            skip as u64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn reproducible_per_stream() {
        let a: Vec<u64> = {
            let mut r = RngState::new(42, 3);
            (0..16).map(|_| r.next_u64()).collect()
        };
        let b: Vec<u64> = {
            let mut r = RngState::new(42, 3);
            (0..16).map(|_| r.next_u64()).collect()
        };
        let c: Vec<u64> = {
            let mut r = RngState::new(42, 4);
            (0..16).map(|_| r.next_u64()).collect()
        };
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn uniform_in_unit_interval() {
        let mut r = RngState::new(1, 0);
        for _ in 0..10_000 {
            let u = r.uniform();
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn poisson_mean_and_variance() {
        let mut r = RngState::new(7, 0);
        let n = 200_000usize;
        let mean = 2.5;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..n {
            let x = r.poisson(mean) as f64;
            sum += x;
            sumsq += x * x;
        }
        let m = sum / n as f64;
        let v = sumsq / n as f64 - m * m;
        // 3 standard errors of the mean: 3 * sqrt(mean / n)
        let se = 3.0 * (mean / n as f64).sqrt();
        assert!((m - mean).abs() < se, "poisson mean {m} vs {mean}");
        assert!((v - mean).abs() < 0.1, "poisson variance {v} vs {mean}");
    }

    #[test]
    fn geometric_skip_mean() {
        let mut r = RngState::new(11, 0);
        let q = 0.05;
        let n = 100_000usize;
        let total: u64 = (0..n).map(|_| r.geometric_skip(q)).sum();
        let m = total as f64 / n as f64;
        let expect = (1.0 - q) / q; // 19
        assert!((m - expect).abs() < 0.35, "skip mean {m} vs {expect}");
    }

    #[test]
    fn index_is_unbiased_smoke() {
        let mut r = RngState::new(5, 0);
        let mut counts = [0usize; 7];
        for _ in 0..70_000 {
            counts[r.index(7)] += 1;
        }
        for &c in &counts {
            assert!((c as f64 - 10_000.0).abs() < 500.0);
        }
    }
}
