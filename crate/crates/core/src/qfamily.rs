//! The q-generalized family: for `n = m·q + r` with `0 ≤ r < q`,
//!
//! ```text
//! Jg(n; q) = Jg(m)^(q−r) · Jg(m+1)^r
//! ```
//!
//! which is the base sequence again at `q = 1`. The quotient is called `m`
//! here because `a` is already the first seed component.
//!
//! The closed form `7⁻q [λ(1+i/2)2ᵐ + Z(m)]^(q−r) [λ(2+i)2ᵐ + Z(m+1)]^r` is
//! the same product written through the Binet form, since
//! `λ(2+i)2ᵐ = λ(1+i/2)2ᵐ⁺¹`; only the product form is evaluated.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::identities::cassini;
use crate::report::IdentityReport;
use crate::sequence::{term_recurrence, xi_seq, SeedTriple};

/// Unique decomposition `n = m·q + r`, `0 ≤ r < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QIndex {
    pub q: u64,
    pub n: u64,
    pub m: u64,
    pub r: u64,
}

impl QIndex {
    pub fn new(q: u64, n: u64) -> Result<Self> {
        if q < 1 {
            return Err(Error::InvalidQ { q, min: 1 });
        }
        Ok(QIndex { q, n, m: n / q, r: n % q })
    }
}

fn base(seed: &SeedTriple, k: u64) -> GaussianRational {
    term_recurrence(seed, k as i64)
}

/// `Jg(n; q)`.
pub fn q_term(seed: &SeedTriple, q: u64, n: u64) -> Result<GaussianRational> {
    let idx = QIndex::new(q, n)?;
    Ok(q_term_at(seed, &idx))
}

fn q_term_at(seed: &SeedTriple, idx: &QIndex) -> GaussianRational {
    let low = base(seed, idx.m).pow(idx.q - idx.r);
    if idx.r == 0 {
        return low;
    }
    low * base(seed, idx.m + 1).pow(idx.r)
}

/// `Jg(mq+1; q)` against `2·Jg(mq; q) − Jg(m(q−1); q−1)·xi`, for the supplied
/// value of `Ξ(m)`.
pub fn q_step_using(
    seed: &SeedTriple,
    q: u64,
    m: u64,
    xi: &GaussianRational,
) -> Result<(GaussianRational, GaussianRational)> {
    if q < 2 {
        return Err(Error::InvalidQ { q, min: 2 });
    }
    let lhs = q_term(seed, q, m * q + 1)?;
    let rhs = q_term(seed, q, m * q)?.scale_int(2) - q_term(seed, q - 1, m * (q - 1))? * xi;
    Ok((lhs, rhs))
}

/// The q-step relation with `Ξ(m) = 2·Jg(m) − Jg(m+1)`.
pub fn q_step(seed: &SeedTriple, q: u64, m: u64) -> Result<(GaussianRational, GaussianRational)> {
    q_step_using(seed, q, m, &xi_seq(seed, m as i64))
}

pub fn q_step_check(seed: &SeedTriple, q: u64, m: u64) -> Result<IdentityReport> {
    let (lhs, rhs) = q_step(seed, q, m)?;
    Ok(IdentityReport::single("qstep", seed, vec![q as i64, m as i64], lhs, rhs))
}

/// The companion statement
/// `Jg(mq+1; q) = 2·Jg(mq; q) + Jg((m+1)q−1; q) + Jg(m(q−1); q−1)·Ξ(m)`.
/// It is evaluated as printed; it does not hold in general.
pub fn q_step_companion(seed: &SeedTriple, q: u64, m: u64) -> Result<(GaussianRational, GaussianRational)> {
    if q < 2 {
        return Err(Error::InvalidQ { q, min: 2 });
    }
    let xi = xi_seq(seed, m as i64);
    let lhs = q_term(seed, q, m * q + 1)?;
    let rhs = q_term(seed, q, m * q)?.scale_int(2)
        + q_term(seed, q, (m + 1) * q - 1)?
        + q_term(seed, q - 1, m * (q - 1))? * xi;
    Ok((lhs, rhs))
}

pub fn q_step_companion_check(seed: &SeedTriple, q: u64, m: u64) -> Result<IdentityReport> {
    let (lhs, rhs) = q_step_companion(seed, q, m)?;
    Ok(IdentityReport::single("qstep-companion", seed, vec![q as i64, m as i64], lhs, rhs))
}

/// `Σ_{r<q} C(q−1, r)·Jg(mq+r; q)` against `Jg(m)·(3Jg(m) − Ξ(m))^(q−1)`.
pub fn binomial_sum(seed: &SeedTriple, q: u64, m: u64) -> Result<(GaussianRational, GaussianRational)> {
    if q < 1 {
        return Err(Error::InvalidQ { q, min: 1 });
    }
    let lhs = (0..q)
        .map(|r| {
            let weight = Rational::from_integer(binomial(q - 1, r));
            Ok(q_term(seed, q, m * q + r)?.scale(&weight))
        })
        .sum::<Result<GaussianRational>>()?;
    let jm = base(seed, m);
    let rhs = &jm * &(jm.scale_int(3) - xi_seq(seed, m as i64)).pow(q - 1);
    Ok((lhs, rhs))
}

pub fn binomial_sum_check(seed: &SeedTriple, q: u64, m: u64) -> Result<IdentityReport> {
    let (lhs, rhs) = binomial_sum(seed, q, m)?;
    Ok(IdentityReport::single("qbinom", seed, vec![q as i64, m as i64], lhs, rhs))
}

/// `Σ_{r<q} Jg(mq+r; q)` evaluated directly.
pub fn geometric_sum_direct(seed: &SeedTriple, q: u64, m: u64) -> Result<GaussianRational> {
    (0..q).map(|r| q_term(seed, q, m * q + r)).sum()
}

/// The direct sum against `Jg(m)·(Jg(m+1)^q − Jg(m)^q) / (Jg(m) − Ξ(m))`.
///
/// The denominator is formed both as `Jg(m) − Ξ(m)` and as
/// `Jg(m+1) − Jg(m)`; the two must coincide. When it vanishes the closed form
/// is undefined and [`Error::DegenerateRatio`] carries the direct sum.
pub fn geometric_sum(seed: &SeedTriple, q: u64, m: u64) -> Result<(GaussianRational, GaussianRational)> {
    let lhs = geometric_sum_direct(seed, q, m)?;
    let (jm, jn) = (base(seed, m), base(seed, m + 1));
    let via_xi = &jm - &xi_seq(seed, m as i64);
    let via_step = &jn - &jm;
    assert_eq!(via_xi, via_step, "step identity violated at m = {m}");
    let numerator = &jm * &(jn.pow(q) - jm.pow(q));
    match numerator.checked_div(&via_xi) {
        Ok(rhs) => Ok((lhs, rhs)),
        Err(Error::DivisionByZero) => Err(Error::DegenerateRatio { m, lhs: Box::new(lhs) }),
        Err(e) => Err(e),
    }
}

pub fn geometric_sum_check(seed: &SeedTriple, q: u64, m: u64) -> Result<IdentityReport> {
    let (lhs, rhs) = geometric_sum(seed, q, m)?;
    Ok(IdentityReport::single("qgeom", seed, vec![q as i64, m as i64], lhs, rhs))
}

/// Ratio-one case of the geometric sum: when `Jg(m+1) = Jg(m)` the sum is
/// `q·Jg(m)^q`. Returns `(direct sum, q·Jg(m)^q)`.
pub fn geometric_sum_ratio_one(seed: &SeedTriple, q: u64, m: u64) -> Result<(GaussianRational, GaussianRational)> {
    let lhs = geometric_sum_direct(seed, q, m)?;
    let rhs = base(seed, m).pow(q).scale(&Rational::from_integer(BigInt::from(q)));
    Ok((lhs, rhs))
}

/// `Jg(2n; 2) − Jg(n−1)Jg(n+1)` against the Cassini right-hand side.
pub fn cassini_bridge(seed: &SeedTriple, n: u64) -> Result<(GaussianRational, GaussianRational)> {
    let k = n as i64;
    let lhs = q_term(seed, 2, 2 * n)? - term_recurrence(seed, k - 1) * term_recurrence(seed, k + 1);
    Ok((lhs, cassini(seed, k).expanded_form))
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j) / BigInt::from(j + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::Preset;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn decomposition() {
        assert_eq!(QIndex::new(3, 14).unwrap(), QIndex { q: 3, n: 14, m: 4, r: 2 });
        assert_eq!(QIndex::new(0, 5), Err(Error::InvalidQ { q: 0, min: 1 }));
        for q in 1..=6 {
            for n in 0..=200 {
                let idx = QIndex::new(q, n).unwrap();
                assert_eq!(idx.m * q + idx.r, n);
                assert!(idx.r < q);
            }
        }
    }

    #[test]
    fn worked_terms() {
        let jg = Preset::Jg.seed();
        assert_eq!(q_term(&jg, 2, 2).unwrap(), g("1"));
        assert_eq!(q_term(&jg, 2, 3).unwrap(), g("1+i"));
        let s: SeedTriple = "1/2,3,-2/3".parse().unwrap();
        for n in 0..12 {
            assert_eq!(q_term(&s, 1, n).unwrap(), term_recurrence(&s, n as i64));
        }
        for m in 0..6 {
            let want = term_recurrence(&s, m as i64).pow(4);
            assert_eq!(q_term(&s, 4, 4 * m).unwrap(), want);
        }
    }

    #[test]
    fn q_step_examples() {
        let jg = Preset::Jg.seed();
        assert_eq!(q_step(&jg, 2, 1).unwrap(), (g("1+i"), g("1+i")));
        // Jg(0) = 0 exercises 0⁰ = 1 in Jg(0; 1).
        assert!(q_step_check(&jg, 2, 0).unwrap().holds());
        assert!(q_step_check(&Preset::Kg.seed(), 2, 0).unwrap().holds());
        assert_eq!(q_step(&jg, 1, 3), Err(Error::InvalidQ { q: 1, min: 2 }));
    }

    #[test]
    fn companion_form_fails_for_jg() {
        let jg = Preset::Jg.seed();
        let report = q_step_companion_check(&jg, 2, 1).unwrap();
        assert!(!report.holds());
    }

    #[test]
    fn binomial_examples() {
        let jg = Preset::Jg.seed();
        assert_eq!(binomial_sum(&jg, 2, 1).unwrap(), (g("2+i"), g("2+i")));
        let s: SeedTriple = "5,-1/4,2".parse().unwrap();
        for m in 0..5 {
            let (lhs, rhs) = binomial_sum(&s, 1, m).unwrap();
            assert_eq!(lhs, term_recurrence(&s, m as i64));
            assert_eq!(rhs, lhs);
        }
        assert!(binomial_sum_check(&Preset::Kg.seed(), 3, 0).unwrap().holds());
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
    }

    #[test]
    fn geometric_examples() {
        let jg = Preset::Jg.seed();
        assert_eq!(geometric_sum(&jg, 2, 1).unwrap(), (g("2+i"), g("2+i")));
        let s: SeedTriple = "2,-3,1/5".parse().unwrap();
        for m in 0..5 {
            let (lhs, rhs) = geometric_sum(&s, 1, m).unwrap();
            assert_eq!(lhs, term_recurrence(&s, m as i64));
            assert_eq!(rhs, lhs);
        }
    }

    #[test]
    fn geometric_degenerate_ratio() {
        // b = a and c = 4a give Jg(1) = Jg(0) = 1 + i.
        let s = SeedTriple::from_ints(1, 1, 4).unwrap();
        assert_eq!(term_recurrence(&s, 0), term_recurrence(&s, 1));
        for q in 1..=5 {
            let want = g("1+i").pow(q).scale_int(q as i64);
            assert_eq!(geometric_sum(&s, q, 0), Err(Error::DegenerateRatio { m: 0, lhs: Box::new(want.clone()) }));
            let (lhs, rhs) = geometric_sum_ratio_one(&s, q, 0).unwrap();
            assert_eq!(lhs, want);
            assert_eq!(rhs, want);
        }
    }

    #[test]
    fn bridge_matches_cassini() {
        let kg = Preset::Kg.seed();
        for n in 1..=30 {
            let (lhs, rhs) = cassini_bridge(&kg, n).unwrap();
            assert_eq!(lhs, rhs, "n={n}");
        }
    }
}
