//! d'Ocagne, Cassini, partial-sum and the three step relations, each as a
//! pair of exactly evaluated sides.
//!
//! Each two-sided function evaluates the left side from the reference
//! recurrence and the right side from its closed form. The `check_*`
//! functions sweep an index range and return an [`IdentityReport`].

use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::omega::omega;
use crate::report::IdentityReport;
use crate::sequence::{psi_seq, term_recurrence, terms_range, xi_seq, SeedTriple};

/// Identity names accepted by [`IdentityKind::from_name`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    Cassini,
    Docagne,
    Sum,
    Step,
    Jump3,
    Window3,
    QStep,
    QBinom,
    QGeom,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 9] = [
        IdentityKind::Cassini,
        IdentityKind::Docagne,
        IdentityKind::Sum,
        IdentityKind::Step,
        IdentityKind::Jump3,
        IdentityKind::Window3,
        IdentityKind::QStep,
        IdentityKind::QBinom,
        IdentityKind::QGeom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Cassini => "cassini",
            IdentityKind::Docagne => "docagne",
            IdentityKind::Sum => "sum",
            IdentityKind::Step => "step",
            IdentityKind::Jump3 => "jump3",
            IdentityKind::Window3 => "window3",
            IdentityKind::QStep => "qstep",
            IdentityKind::QBinom => "qbinom",
            IdentityKind::QGeom => "qgeom",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        IdentityKind::ALL.into_iter().find(|k| k.name() == name).ok_or_else(|| Error::UnknownIdentity(name.to_string()))
    }
}

/// Name used in reports for index points outside an identity's stated hypothesis.
pub fn outside_hypothesis(name: &str) -> String {
    format!("{name} (outside hypothesis)")
}

/// d'Ocagne:
///
/// ```text
/// Jg(m+1)Jg(n) − Jg(m)Jg(n+1)
///   = (1/49)[(λ₁² − λ₁λ₂ + λ₂²)Ω(n−m) + λ(1+i/2)(2ᵐΨ(n) − 2ⁿΨ(m))]
/// ```
///
/// Stated for `n ≥ m ≥ 0`; both sides are still evaluated for other pairs.
pub fn docagne(seed: &SeedTriple, m: i64, n: i64) -> (GaussianRational, GaussianRational) {
    let t = |k| term_recurrence(seed, k);
    let lhs = t(m + 1) * t(n) - t(m) * t(n + 1);
    (lhs, docagne_rhs(seed, m, n))
}

fn docagne_rhs(seed: &SeedTriple, m: i64, n: i64) -> GaussianRational {
    let k = seed.constants();
    let unit = k.geometric(0);
    let cross = omega(n - m).times(&k.cross_constant());
    let psi_n = psi_seq(seed, n).scale(&Rational::pow2(m));
    let psi_m = psi_seq(seed, m).scale(&Rational::pow2(n));
    (cross + unit * (psi_n - psi_m)).scale(&forty_ninth())
}

/// Both sides of d'Ocagne at every `(m, n)` with `0 ≤ m ≤ n ≤ max`.
pub fn check_docagne(seed: &SeedTriple, max: i64) -> IdentityReport {
    let points = (0..=max).flat_map(|n| (0..=n).map(move |m| (m, n)));
    IdentityReport::sweep(
        "docagne",
        seed,
        points.map(|(m, n)| {
            let (lhs, rhs) = docagne(seed, m, n);
            (vec![m, n], lhs, rhs)
        }),
    )
}

/// The three evaluations involved in Cassini's identity at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CassiniSides {
    /// `Jg(n)² − Jg(n−1)Jg(n+1)`
    pub lhs: GaussianRational,
    /// `(1/49)[λ₁²−λ₁λ₂+λ₂² + λ(1+i/2)2ⁿ⁻¹(Ψ(n) − 2Ψ(n−1))]`
    pub psi_form: GaussianRational,
    /// Same with `Ψ(n) − 2Ψ(n−1)` expanded to `(8λ₁−3λ₂)Ω(n) + (3λ₁+5λ₂)Ω(n+1)`.
    pub expanded_form: GaussianRational,
}

impl CassiniSides {
    pub fn consistent(&self) -> bool {
        self.lhs == self.psi_form && self.psi_form == self.expanded_form
    }
}

/// Cassini's identity, stated for `n ≥ 1`.
pub fn cassini(seed: &SeedTriple, n: i64) -> CassiniSides {
    let t = |k| term_recurrence(seed, k);
    let now = t(n);
    let lhs = &now * &now - t(n - 1) * t(n + 1);

    let k = seed.constants();
    let weight = k.geometric(n - 1);
    let constant = k.cross_constant();
    let psi_diff = psi_seq(seed, n) - psi_seq(seed, n - 1).scale_int(2);
    let psi_form = (&constant + &(&weight * &psi_diff)).scale(&forty_ninth());

    let first = cassini_expanded_coefficients(seed);
    let expanded = omega(n).times(&first.0) + omega(n + 1).times(&first.1);
    let expanded_form = (constant + weight * expanded).scale(&forty_ninth());

    CassiniSides { lhs, psi_form, expanded_form }
}

/// `(8λ₁ − 3λ₂, 3λ₁ + 5λ₂)`.
pub fn cassini_expanded_coefficients(seed: &SeedTriple) -> (GaussianRational, GaussianRational) {
    let k = seed.constants();
    (k.lambda1.scale_int(8) - k.lambda2.scale_int(3), k.lambda1.scale_int(3) + k.lambda2.scale_int(5))
}

/// Cassini over `1..=max`; fails at the first index where any of the three
/// evaluations differ. The counterexample compares lhs against whichever
/// closed form disagrees.
pub fn check_cassini(seed: &SeedTriple, max: i64) -> IdentityReport {
    IdentityReport::sweep(
        "cassini",
        seed,
        (1..=max).map(|n| {
            let sides = cassini(seed, n);
            let rhs = if sides.lhs == sides.psi_form { sides.expanded_form } else { sides.psi_form };
            (vec![n], sides.lhs, rhs)
        }),
    )
}

/// Partial sum `Σ_{l=0}^{n} Jg(l)` against
/// `(1/3)[Jg(n+2) + 2Jg(n) + (a−c) + (c−3b−a)/2·i]`.
pub fn partial_sum(seed: &SeedTriple, n: u64) -> (GaussianRational, GaussianRational) {
    let n = n as i64;
    let lhs: GaussianRational = terms_range(seed, 0, n).iter().sum();
    (lhs, partial_sum_closed(seed, n, &partial_sum_constant(seed)))
}

/// `(a − c) + (c − 3b − a)/2·i`.
pub fn partial_sum_constant(seed: &SeedTriple) -> GaussianRational {
    let (a, b, c) = (seed.a(), seed.b(), seed.c());
    let half = Rational::new(1, 2).expect("nonzero denominator");
    let im = &(&(c - &(&Rational::from(3) * b)) - a) * &half;
    GaussianRational::new(a - c, im)
}

/// `(1/3)[Jg(n+2) + 2Jg(n) + constant]`, used with both the general constant
/// and the printed preset constants.
pub fn partial_sum_closed(seed: &SeedTriple, n: i64, constant: &GaussianRational) -> GaussianRational {
    let third = Rational::new(1, 3).expect("nonzero denominator");
    let inner = term_recurrence(seed, n + 2) + term_recurrence(seed, n).scale_int(2) + constant;
    inner.scale(&third)
}

/// Closed form of the partial sum against a running sum over `0..=max`.
pub fn check_partial_sum(seed: &SeedTriple, max: u64) -> IdentityReport {
    let terms = terms_range(seed, 0, max as i64);
    let constant = partial_sum_constant(seed);
    let mut running = GaussianRational::zero();
    let points = terms.iter().enumerate().map(|(n, term)| {
        running += term;
        let n = n as i64;
        (vec![n], running.clone(), partial_sum_closed(seed, n, &constant))
    });
    IdentityReport::sweep("sum", seed, points)
}

/// The induction step of the partial-sum closed form, checked without the
/// direct sum: `closed(n+1) = closed(n) + Jg(n+1)` for `0 ≤ n < max`.
pub fn check_partial_sum_telescoping(seed: &SeedTriple, max: u64) -> IdentityReport {
    let constant = partial_sum_constant(seed);
    IdentityReport::sweep(
        "sum-telescoping",
        seed,
        (0..max as i64).map(|n| {
            let next = partial_sum_closed(seed, n + 1, &constant);
            let prev = partial_sum_closed(seed, n, &constant) + term_recurrence(seed, n + 1);
            (vec![n], next, prev)
        }),
    )
}

/// `Jg(n+3) = Jg(n) + λ(1+i/2)2ⁿ`.
pub fn jump3(seed: &SeedTriple, n: i64) -> (GaussianRational, GaussianRational) {
    let k = seed.constants();
    (term_recurrence(seed, n + 3), term_recurrence(seed, n) + k.geometric(n))
}

/// `Jg(n) + Jg(n+1) + Jg(n+2) = λ(1+i/2)2ⁿ`.
pub fn window3(seed: &SeedTriple, n: i64) -> (GaussianRational, GaussianRational) {
    let k = seed.constants();
    let lhs = (n..n + 3).map(|j| term_recurrence(seed, j)).sum();
    (lhs, k.geometric(n))
}

/// `Jg(n+1) = 2Jg(n) − Ξ(n)`. Holds for every integer n.
pub fn step(seed: &SeedTriple, n: i64) -> (GaussianRational, GaussianRational) {
    let lhs = term_recurrence(seed, n + 1);
    let rhs = term_recurrence(seed, n).scale_int(2) - xi_seq(seed, n);
    (lhs, rhs)
}

/// Sweeps a two-sided relation over an index range.
pub fn check_indexed<F>(name: &str, seed: &SeedTriple, range: std::ops::RangeInclusive<i64>, sides: F) -> IdentityReport
where
    F: Fn(&SeedTriple, i64) -> (GaussianRational, GaussianRational),
{
    IdentityReport::sweep(
        name,
        seed,
        range.map(|n| {
            let (lhs, rhs) = sides(seed, n);
            (vec![n], lhs, rhs)
        }),
    )
}

fn forty_ninth() -> Rational {
    Rational::new(1, 49).expect("nonzero denominator")
}
