//! Exact arithmetic for generalized Gaussian third-order Jacobsthal
//! sequences.
//!
//! The sequence `Jg(n)` satisfies `Jg(n+3) = Jg(n+2) + Jg(n+1) + 2·Jg(n)`
//! with Gaussian-rational initial terms fixed by a seed `(a, b, c)`. This
//! crate evaluates it at any integer index by three independent routes,
//! checks the closed-form identities exactly, expands the generating
//! function, evaluates the q-generalized family and audits the specialised
//! corollary formulas. No floating point is used anywhere.

pub mod arith;
pub mod audit;
pub mod cli;
pub mod error;
pub mod genfunc;
pub mod identities;
pub mod omega;
pub mod qfamily;
pub mod report;
pub mod sequence;

pub use arith::{GaussianRational, Rational};
pub use error::{Error, Result};
pub use report::{IdentityReport, Status};
pub use sequence::{DerivedConstants, Preset, SeedTriple, SequenceTerm};
