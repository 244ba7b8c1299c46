//! Seeds, derived constants and the three term evaluators.
//!
//! A seed `(a, b, c)` fixes the initial terms
//!
//! ```text
//! Jg(0) = a + (c − b − a)/2 · i,   Jg(1) = b + a·i,   Jg(2) = c + b·i
//! ```
//!
//! and the recurrence `Jg(n+3) = Jg(n+2) + Jg(n+1) + 2·Jg(n)` extends them to
//! every integer index (backwards via `Jg(n) = (Jg(n+3) − Jg(n+2) − Jg(n+1))/2`).
//! [`term_recurrence`] is the reference evaluator; [`term_binet`] and
//! [`term_fast`] are checked against it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::omega::omega;

/// The two named specialisations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Gaussian third-order Jacobsthal numbers, seed (0, 1, 1).
    Jg,
    /// Gaussian modified third-order Jacobsthal numbers, seed (3, 1, 3).
    Kg,
}

impl Preset {
    pub fn seed(self) -> SeedTriple {
        let (a, b, c) = match self {
            Preset::Jg => (0, 1, 1),
            Preset::Kg => (3, 1, 3),
        };
        SeedTriple { a: a.into(), b: b.into(), c: c.into() }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Jg => "jg",
            Preset::Kg => "kg",
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "jg" => Ok(Preset::Jg),
            "kg" => Ok(Preset::Kg),
            other => Err(Error::Parse(format!("unknown preset `{other}` (expected jg or kg)"))),
        }
    }
}

/// Initial data `(a, b, c)`, not all zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeedTriple {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl SeedTriple {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::AllZeroSeed);
        }
        Ok(SeedTriple { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        SeedTriple::new(a.into(), b.into(), c.into())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn components(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn constants(&self) -> DerivedConstants {
        DerivedConstants::of(self)
    }

    /// Terms at indices 0, 1, 2.
    pub fn initial_terms(&self) -> [SequenceTerm; 3] {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let half = Rational::new(1, 2).expect("nonzero denominator");
        [
            SequenceTerm::new(0, GaussianRational::new(a.clone(), &(c - b - a) * &half)),
            SequenceTerm::new(1, GaussianRational::new(b.clone(), a.clone())),
            SequenceTerm::new(2, GaussianRational::new(c.clone(), b.clone())),
        ]
    }

    fn initial_values(&self) -> [GaussianRational; 3] {
        self.initial_terms().map(|t| t.value)
    }
}

impl fmt::Display for SeedTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

/// Parses `a,b,c` with each component a fraction literal.
impl FromStr for SeedTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("seed `{s}` must have exactly three components")));
        }
        SeedTriple::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?)
    }
}

/// A sequence value together with its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTerm {
    pub index: i64,
    pub value: GaussianRational,
}

impl SequenceTerm {
    pub fn new(index: i64, value: GaussianRational) -> Self {
        SequenceTerm { index, value }
    }
}

/// Seed-dependent constants of the closed forms.
///
/// - `lambda  = a + b + c`
/// - `lambda1 = 4a + 4b − 3c + (2a − 5b + 2c)i`
/// - `lambda2 = 6a − b − c − (4a + 4b − 3c)i`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedConstants {
    pub lambda: Rational,
    pub lambda1: GaussianRational,
    pub lambda2: GaussianRational,
}

impl DerivedConstants {
    pub fn of(seed: &SeedTriple) -> Self {
        let (a, b, c) = (&seed.a, &seed.b, &seed.c);
        let k = |x: i64| Rational::from(x);
        let p = &(&k(4) * a + &k(4) * b) - &(&k(3) * c);
        let lambda1 = GaussianRational::new(p.clone(), &(&k(2) * a - &k(5) * b) + &(&k(2) * c));
        let lambda2 = GaussianRational::new(&(&k(6) * a - b) - c, -p);
        DerivedConstants { lambda: &(a + b) + c, lambda1, lambda2 }
    }

    /// `λ(1 + i/2)·2ⁿ`, the geometric part of the Binet form (n of any sign).
    pub fn geometric(&self, n: i64) -> GaussianRational {
        let scale = &self.lambda * &Rational::pow2(n);
        let half = Rational::new(1, 2).expect("nonzero denominator");
        GaussianRational::new(scale.clone(), &scale * &half)
    }

    /// `λ₁² − λ₁λ₂ + λ₂²`.
    pub fn cross_constant(&self) -> GaussianRational {
        let (l1, l2) = (&self.lambda1, &self.lambda2);
        &(l1 * l1 - l1 * l2) + &(l2 * l2)
    }
}

/// `Jg(n)` by iterating the recurrence from the initial terms. Reference
/// evaluator for every other routine in the crate.
pub fn term_recurrence(seed: &SeedTriple, n: i64) -> GaussianRational {
    let [t0, t1, t2] = seed.initial_values();
    match n {
        0 => t0,
        1 => t1,
        2 => t2,
        n if n > 2 => {
            let (mut x, mut y, mut z) = (t0, t1, t2);
            for _ in 2..n {
                let next = &(&z + &y) + &x.scale_int(2);
                x = y;
                y = z;
                z = next;
            }
            z
        }
        _ => backward(t0, t1, t2, n),
    }
}

/// Walks the recurrence backwards from the window `(Jg(0), Jg(1), Jg(2))`
/// down to index `n < 0`.
fn backward(t0: GaussianRational, t1: GaussianRational, t2: GaussianRational, n: i64) -> GaussianRational {
    let half = Rational::new(1, 2).expect("nonzero denominator");
    // (lo, mid, hi) = (Jg(k), Jg(k+1), Jg(k+2))
    let (mut lo, mut mid, mut hi) = (t0, t1, t2);
    for _ in n..0 {
        let prev = (&(&hi - &mid) - &lo).scale(&half);
        hi = mid;
        mid = lo;
        lo = prev;
    }
    lo
}

/// Every term in `from..=to`, computed in one pass of the recurrence.
pub fn terms_range(seed: &SeedTriple, from: i64, to: i64) -> Vec<GaussianRational> {
    if from > to {
        return Vec::new();
    }
    let mut out = Vec::with_capacity((to - from + 1) as usize);
    let mut window = [term_recurrence(seed, from), term_recurrence(seed, from + 1), term_recurrence(seed, from + 2)];
    for _ in from..=to {
        let next = &(&window[2] + &window[1]) + &window[0].scale_int(2);
        let [x, y, z] = window;
        out.push(x);
        window = [y, z, next];
    }
    out
}

/// `Z(n) = λ₁Ω(n) + λ₂Ω(n+1)`, the periodic part of the Binet form.
pub fn z_seq(seed: &SeedTriple, n: i64) -> GaussianRational {
    let k = seed.constants();
    z_from(&k, n)
}

fn z_from(k: &DerivedConstants, n: i64) -> GaussianRational {
    omega(n).times(&k.lambda1) + omega(n + 1).times(&k.lambda2)
}

/// `Jg(n) = (1/7)[λ(1 + i/2)·2ⁿ + Z(n)]`, valid for every integer n.
pub fn term_binet(seed: &SeedTriple, n: i64) -> GaussianRational {
    let k = seed.constants();
    (k.geometric(n) + z_from(&k, n)).scale(&seventh())
}

/// `Ψ(n) = (2λ₁ + λ₂)Ω(n) + (3λ₂ − λ₁)Ω(n+1)`.
pub fn psi_seq(seed: &SeedTriple, n: i64) -> GaussianRational {
    let k = seed.constants();
    let first = &k.lambda1.scale_int(2) + &k.lambda2;
    let second = &k.lambda2.scale_int(3) - &k.lambda1;
    omega(n).times(&first) + omega(n + 1).times(&second)
}

/// The step defect `Ξ(n)` with `Jg(n+1) = 2·Jg(n) − Ξ(n)`, equal to `Ψ(n)/7`:
///
/// ```text
/// Ξ(n) = [2a + b − c + (c − 2b)i]Ω(n) + [2a − b − (2a + b − c)i]Ω(n+1)
/// ```
pub fn xi_seq(seed: &SeedTriple, n: i64) -> GaussianRational {
    psi_seq(seed, n).scale(&seventh())
}

/// The real generalized third-order Jacobsthal number
/// `(1/7)[(a+b+c)2ⁿ + (4a+4b−3c)Ω(n) + (6a−b−c)Ω(n+1)]`.
pub fn real_j_term(seed: &SeedTriple, n: i64) -> Rational {
    let k = seed.constants();
    let sum = &(&k.lambda * &Rational::pow2(n)) + &(&k.lambda1.re * &omega(n).to_rational());
    let sum = &sum + &(&k.lambda2.re * &omega(n + 1).to_rational());
    &sum * &seventh()
}

/// The two closed forms printed for negative indices, at `Jg(−n)` for n ≥ 1:
///
/// ```text
/// (1/7)[λ(1+i/2)2⁻ⁿ − λ₁Ω(n) − λ₂Ω(n−1)]
/// (1/7)[λ(1+i/2)2⁻ⁿ + (2a−5b+2c − (6a−b−c)i)Ω(n) + λ₂Ω(n+1)]
/// ```
pub fn negative_binet_forms(seed: &SeedTriple, n: i64) -> (GaussianRational, GaussianRational) {
    let k = seed.constants();
    let (a, b, c) = (seed.a(), seed.b(), seed.c());
    let geo = k.geometric(-n);
    let first = &(&geo - &omega(n).times(&k.lambda1)) - &omega(n - 1).times(&k.lambda2);
    let r = |x: i64| Rational::from(x);
    let coeff = GaussianRational::new(&(&(&r(2) * a) - &(&r(5) * b)) + &(&r(2) * c), -(&(&(&r(6) * a) - b) - c));
    let second = &(&geo + &omega(n).times(&coeff)) + &omega(n + 1).times(&k.lambda2);
    (first.scale(&seventh()), second.scale(&seventh()))
}

/// The printed closed forms for `Jg(−1)` and `Jg(−2)`:
/// `(c−b−a)/2 − (a−3b+c)/4·i` and `−(a−3b+c)/4 + (7a−b−c)/8·i`.
pub fn negative_initial_terms(seed: &SeedTriple) -> (GaussianRational, GaussianRational) {
    let (a, b, c) = (seed.a(), seed.b(), seed.c());
    let r = |x: i64| Rational::from(x);
    let frac = |n: i64, d: i64| Rational::new(n, d).expect("nonzero denominator");
    let t = &(a - &(&r(3) * b)) + c;
    let minus_one = GaussianRational::new(&(&(c - b) - a) * &frac(1, 2), -(&t * &frac(1, 4)));
    let minus_two = GaussianRational::new(-(&t * &frac(1, 4)), &(&(&(&r(7) * a) - b) - c) * &frac(1, 8));
    (minus_one, minus_two)
}

/// `Jg(n)` in O(log n) multiplications for n ≥ 0 by powering the companion
/// matrix of `ξ³ − ξ² − ξ − 2`. Negative indices use the backward recurrence.
pub fn term_fast(seed: &SeedTriple, n: i64) -> GaussianRational {
    let [t0, t1, t2] = seed.initial_values();
    if n < 0 {
        return backward(t0, t1, t2, n);
    }
    // state (Jg(k+2), Jg(k+1), Jg(k)); the last row of M^n picks out Jg(n).
    let power = Companion::step().pow(n as u64);
    let row = &power.0[2];
    [&t2, &t1, &t0].into_iter().zip(row).map(|(t, coeff)| t.scale(&Rational::from_integer(coeff.clone()))).sum()
}

/// 3×3 integer matrix, used only for companion-matrix powering.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Companion([[BigInt; 3]; 3]);

impl Companion {
    fn identity() -> Self {
        Companion(std::array::from_fn(|r| std::array::from_fn(|c| if r == c { BigInt::one() } else { BigInt::zero() })))
    }

    /// Maps `(x(k+2), x(k+1), x(k))` to `(x(k+3), x(k+2), x(k+1))`.
    fn step() -> Self {
        let b = |v: i64| BigInt::from(v);
        Companion([[b(1), b(1), b(2)], [b(1), b(0), b(0)], [b(0), b(1), b(0)]])
    }

    fn mul(&self, rhs: &Companion) -> Companion {
        Companion(std::array::from_fn(|r| std::array::from_fn(|c| (0..3).map(|k| &self.0[r][k] * &rhs.0[k][c]).sum())))
    }

    fn pow(&self, mut k: u64) -> Companion {
        let mut acc = Companion::identity();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Which evaluator to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evaluator {
    Recurrence,
    Binet,
    Fast,
}

impl Evaluator {
    pub const ALL: [Evaluator; 3] = [Evaluator::Recurrence, Evaluator::Binet, Evaluator::Fast];

    pub fn eval(self, seed: &SeedTriple, n: i64) -> GaussianRational {
        match self {
            Evaluator::Recurrence => term_recurrence(seed, n),
            Evaluator::Binet => term_binet(seed, n),
            Evaluator::Fast => term_fast(seed, n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Evaluator::Recurrence => "recurrence",
            Evaluator::Binet => "binet",
            Evaluator::Fast => "fast",
        }
    }
}

fn seventh() -> Rational {
    Rational::new(1, 7).expect("nonzero denominator")
}
