//! Deterministic random exact points for identity testing.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gaussian::GaussianRational;

pub const DEFAULT_SEED: u64 = 42;
/// Numerators are drawn from `[-BOUND, BOUND]`, denominators from `1..=DEN_BOUND`.
/// Small values keep exact intermediate results short; the value set is still
/// large enough that a random point hits a given proper subvariety rarely.
pub const BOUND: i64 = 7;
pub const DEN_BOUND: i64 = 3;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream for the `k`-th trial of a check, so trials can run
    /// in any order without changing their points.
    pub fn for_trial(seed: u64, stream: u64, k: u64) -> Self {
        let mix = seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(stream.wrapping_mul(0xBF58_476D_1CE4_E5B9))
            .wrapping_add(k);
        Sampler::new(mix)
    }

    pub fn rational(&mut self) -> BigRational {
        let num = self.rng.gen_range(-BOUND..=BOUND);
        let den = self.rng.gen_range(1..=DEN_BOUND);
        BigRational::new(num.into(), den.into())
    }

    pub fn nonzero_rational(&mut self) -> BigRational {
        loop {
            let r = self.rational();
            if r != BigRational::from_integer(0.into()) {
                return r;
            }
        }
    }

    /// A Gaussian rational with nonzero real and imaginary parts.
    pub fn gaussian(&mut self) -> GaussianRational {
        GaussianRational::new(self.nonzero_rational(), self.nonzero_rational())
    }

    /// Uniform index in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn gaussians(&mut self, k: usize) -> Vec<GaussianRational> {
        (0..k).map(|_| self.gaussian()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn deterministic_and_nonzero() {
        let a: Vec<_> = Sampler::new(7).gaussians(10);
        let b: Vec<_> = Sampler::new(7).gaussians(10);
        assert_eq!(a, b);
        assert!(a.iter().all(|z| !z.re().is_zero() && !z.im().is_zero()));
        assert_ne!(
            Sampler::for_trial(42, 1, 0).gaussian(),
            Sampler::for_trial(42, 1, 1).gaussian()
        );
    }
}
