//! Power-series expansion of the generating function
//! `N(ξ) / (1 − ξ − ξ² − 2ξ³)` with a quadratic numerator `N`.

use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::sequence::{terms_range, SeedTriple};

/// Coefficients of `1 − ξ − ξ² − 2ξ³`, lowest degree first.
pub const DENOMINATOR: [i64; 4] = [1, -1, -1, -2];

/// Numerator coefficients `[N₀, N₁, N₂]`:
///
/// ```text
/// N₀ = a + (c−b−a)/2·i
/// N₁ = (b−a) + (3a+b−c)/2·i
/// N₂ = (c−b−a) − (a−3b+c)/2·i
/// ```
pub fn numerator_poly(seed: &SeedTriple) -> [GaussianRational; 3] {
    let (a, b, c) = (seed.a(), seed.b(), seed.c());
    let half = Rational::new(1, 2).expect("nonzero denominator");
    let three = Rational::from(3);
    let cba = &(c - b) - a;
    [
        GaussianRational::new(a.clone(), &cba * &half),
        GaussianRational::new(b - a, &(&(&(&three * a) + b) - c) * &half),
        GaussianRational::new(cba, -(&(&(a - &(&three * b)) + c) * &half)),
    ]
}

/// Prefix of the series coefficients; coefficient `k` multiplies `ξᵏ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesExpansion {
    pub seed: SeedTriple,
    pub coefficients: Vec<GaussianRational>,
}

impl SeriesExpansion {
    /// Per-coefficient agreement with the reference recurrence.
    pub fn verify(&self) -> Vec<bool> {
        let truth = terms_range(&self.seed, 0, self.coefficients.len() as i64 - 1);
        self.coefficients.iter().zip(&truth).map(|(c, t)| c == t).collect()
    }
}

/// First `count` coefficients of the generating function of `seed`.
pub fn expand(seed: &SeedTriple, count: usize) -> Result<SeriesExpansion> {
    let coefficients = expand_numerator(&numerator_poly(seed), count)?;
    Ok(SeriesExpansion { seed: seed.clone(), coefficients })
}

/// Long division of `numerator / (1 − ξ − ξ² − 2ξ³)` to `count` terms:
/// `c(k) = c(k−1) + c(k−2) + 2c(k−3) + N(k)`.
pub fn expand_numerator(numerator: &[GaussianRational], count: usize) -> Result<Vec<GaussianRational>> {
    if count == 0 {
        return Err(Error::EmptySeries);
    }
    let mut out: Vec<GaussianRational> = Vec::with_capacity(count);
    for k in 0..count {
        let mut next = numerator.get(k).cloned().unwrap_or_else(GaussianRational::zero);
        for (lag, &d) in DENOMINATOR.iter().enumerate().skip(1) {
            if let Some(prev) = k.checked_sub(lag).map(|j| &out[j]) {
                next -= prev.scale_int(d);
            }
        }
        out.push(next);
    }
    Ok(out)
}

/// Truncated product of a series prefix with the denominator polynomial.
pub fn multiply_by_denominator(coefficients: &[GaussianRational]) -> Vec<GaussianRational> {
    (0..coefficients.len())
        .map(|k| {
            DENOMINATOR
                .iter()
                .enumerate()
                .filter_map(|(lag, &d)| k.checked_sub(lag).map(|j| coefficients[j].scale_int(d)))
                .sum()
        })
        .collect()
}
