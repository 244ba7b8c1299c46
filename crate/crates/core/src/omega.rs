//! The period-3 sequence Ω with values 0, 1, −1.
//!
//! Ω is the oscillating part of every closed form in this crate. It is
//! evaluated from the residue of the index modulo 3, which makes it total on
//! all integers and gives `Ω(−n) = −Ω(n)`.

use crate::arith::{GaussianRational, Rational};

/// A value of Ω, restricted to {−1, 0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OmegaValue(i8);

impl OmegaValue {
    pub const ZERO: OmegaValue = OmegaValue(0);
    pub const ONE: OmegaValue = OmegaValue(1);
    pub const MINUS_ONE: OmegaValue = OmegaValue(-1);

    pub fn get(self) -> i8 {
        self.0
    }

    pub fn to_rational(self) -> Rational {
        Rational::from(i64::from(self.0))
    }

    /// `self · x`, without a general multiplication.
    pub fn times(self, x: &GaussianRational) -> GaussianRational {
        match self.0 {
            0 => GaussianRational::zero(),
            1 => x.clone(),
            _ => -x,
        }
    }
}

impl From<OmegaValue> for i64 {
    fn from(v: OmegaValue) -> i64 {
        i64::from(v.0)
    }
}

/// Ω(n): 0 if n ≡ 0, 1 if n ≡ 1, −1 if n ≡ 2 (mod 3), residue taken in [0, 3).
pub fn omega(n: i64) -> OmegaValue {
    match n.rem_euclid(3) {
        0 => OmegaValue::ZERO,
        1 => OmegaValue::ONE,
        _ => OmegaValue::MINUS_ONE,
    }
}

/// `Ω(m+1)·Ω(n) − Ω(m)·Ω(n+1)`, which collapses to `Ω(n−m)`.
pub fn omega_cross(m: i64, n: i64) -> i64 {
    let w = |k: i64| i64::from(omega(k));
    w(m + 1) * w(n) - w(m) * w(n + 1)
}
