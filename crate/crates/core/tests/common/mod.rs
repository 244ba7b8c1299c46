#![allow(dead_code)]

use jacobsthal::{GaussianRational, Rational, SeedTriple};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x4a67_0000 ^ stream)
}

/// Numerator in [−20, 20], denominator in [1, 12].
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-20i64..=20), rng.gen_range(1i64..=12)).expect("positive denominator")
}

/// A random seed, never all zero.
pub fn random_seed(rng: &mut ChaCha8Rng) -> SeedTriple {
    loop {
        let [a, b, c] = [(); 3].map(|_| random_rational(rng));
        if let Ok(seed) = SeedTriple::new(a, b, c) {
            return seed;
        }
    }
}

pub fn random_seeds(stream: u64, count: usize) -> Vec<SeedTriple> {
    let mut r = rng(stream);
    (0..count).map(|_| random_seed(&mut r)).collect()
}

pub fn g(s: &str) -> GaussianRational {
    s.parse().expect("valid gaussian literal")
}

pub fn q(s: &str) -> Rational {
    s.parse().expect("valid fraction literal")
}
