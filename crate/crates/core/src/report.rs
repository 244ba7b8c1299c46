//! Structured outcome of checking an identity at one or more index points.

use serde::Serialize;

use crate::arith::GaussianRational;
use crate::sequence::SeedTriple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
        }
    }
}

/// First index point where the two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub indices: Vec<i64>,
    pub lhs: GaussianRational,
    pub rhs: GaussianRational,
}

/// Result of one identity over the index points it was checked at.
///
/// The status is derived from the counterexample, so a report holds exactly
/// when no counterexample was recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    identity: String,
    seed: SeedTriple,
    indices: Vec<Vec<i64>>,
    counterexample: Option<Counterexample>,
}

impl IdentityReport {
    /// Evaluates `points` in order and stops at the first mismatch.
    pub fn sweep<I>(identity: impl Into<String>, seed: &SeedTriple, points: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, GaussianRational, GaussianRational)>,
    {
        let mut report =
            IdentityReport { identity: identity.into(), seed: seed.clone(), indices: Vec::new(), counterexample: None };
        for (indices, lhs, rhs) in points {
            report.indices.push(indices.clone());
            if lhs != rhs {
                report.counterexample = Some(Counterexample { indices, lhs, rhs });
                break;
            }
        }
        report
    }

    /// Fallible variant of [`IdentityReport::sweep`]: the first error aborts.
    pub fn try_sweep<I, E>(identity: impl Into<String>, seed: &SeedTriple, points: I) -> Result<Self, E>
    where
        I: IntoIterator<Item = Result<(Vec<i64>, GaussianRational, GaussianRational), E>>,
    {
        let mut collected = Vec::new();
        for point in points {
            let point = point?;
            let mismatch = point.1 != point.2;
            collected.push(point);
            if mismatch {
                break;
            }
        }
        Ok(IdentityReport::sweep(identity, seed, collected))
    }

    pub fn single(
        identity: impl Into<String>,
        seed: &SeedTriple,
        indices: Vec<i64>,
        lhs: GaussianRational,
        rhs: GaussianRational,
    ) -> Self {
        IdentityReport::sweep(identity, seed, [(indices, lhs, rhs)])
    }

    pub fn identity(&self) -> &str {
        &self.identity
    }

    pub fn seed(&self) -> &SeedTriple {
        &self.seed
    }

    pub fn indices(&self) -> &[Vec<i64>] {
        &self.indices
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexample.as_ref()
    }

    pub fn status(&self) -> Status {
        if self.counterexample.is_some() {
            Status::Fails
        } else {
            Status::Holds
        }
    }

    pub fn holds(&self) -> bool {
        self.status() == Status::Holds
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson::from(self)).expect("report serializes")
    }
}

/// `"re,im"` with both parts as reduced fractions.
pub fn pair_text(x: &GaussianRational) -> String {
    format!("{},{}", x.re, x.im)
}

#[derive(Serialize)]
struct ReportJson {
    identity: String,
    seed: [String; 3],
    status: Status,
    counterexample: Option<CounterexampleJson>,
}

#[derive(Serialize)]
struct CounterexampleJson {
    indices: Vec<i64>,
    lhs: String,
    rhs: String,
}

impl From<&IdentityReport> for ReportJson {
    fn from(r: &IdentityReport) -> Self {
        ReportJson {
            identity: r.identity.clone(),
            seed: r.seed.components().map(|c| c.to_string()),
            status: r.status(),
            counterexample: r.counterexample.as_ref().map(|c| CounterexampleJson {
                indices: c.indices.clone(),
                lhs: pair_text(&c.lhs),
                rhs: pair_text(&c.rhs),
            }),
        }
    }
}
