use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::report::CheckReport;

/// Named numeric limits of a campaign (`n`, `m`, `k`, ...).
pub type Bounds = BTreeMap<String, u64>;

/// How much a campaign's statement is backed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    /// A proved statement: a counterexample is a bug or a wrong statement.
    Theorem,
    /// A conjecture: checked up to the bound, never asserted beyond it.
    Conjecture,
    /// An open question: only statistics are reported.
    Question,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Theorem => "theorem",
            Severity::Conjecture => "conjecture",
            Severity::Question => "question",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    VerifiedToBound,
    Counterexample,
    Observation,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::VerifiedToBound => "verified-to-bound",
            Status::Counterexample => "counterexample",
            Status::Observation => "observation",
        })
    }
}

/// What a campaign body produces before it is wrapped in a report.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub checks: Vec<CheckReport>,
    pub observations: BTreeMap<String, Value>,
}

impl Outcome {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(mut self, report: CheckReport) -> Self {
        self.checks.push(report);
        self
    }

    pub fn observe(mut self, key: impl Into<String>, value: impl Into<Value>) -> Self {
        self.observations.insert(key.into(), value.into());
        self
    }

    /// Counterexample if any check failed, observation if there were no
    /// checks at all, verified-to-bound otherwise.
    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| !c.ok()) {
            Status::Counterexample
        } else if self.checks.is_empty() {
            Status::Observation
        } else {
            Status::VerifiedToBound
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub name: String,
    pub severity: Severity,
    /// The statement under test, in words.
    pub statement: String,
    pub bounds: Bounds,
    pub status: Status,
    pub checks: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub observations: BTreeMap<String, Value>,
    /// Wall-clock time in milliseconds. Left out of deterministic output.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl CampaignReport {
    /// The first failing check.
    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.checks.iter().find(|c| !c.ok())
    }

    pub fn cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }
}

/// Process exit code for a set of finished campaigns: 1 if a theorem
/// campaign found a counterexample, otherwise 3 if any conjecture or
/// question campaign ran or anything ended as an observation, otherwise 0.
pub fn exit_code(reports: &[CampaignReport]) -> i32 {
    let theorem_failed = reports
        .iter()
        .any(|r| r.severity == Severity::Theorem && r.status == Status::Counterexample);
    if theorem_failed {
        1
    } else if reports
        .iter()
        .any(|r| r.severity != Severity::Theorem || r.status == Status::Observation)
    {
        3
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(severity: Severity, status: Status) -> CampaignReport {
        CampaignReport {
            name: "x".into(),
            severity,
            statement: String::new(),
            bounds: Bounds::new(),
            status,
            checks: Vec::new(),
            observations: BTreeMap::new(),
            wall_ms: None,
        }
    }

    #[test]
    fn exit_codes() {
        use Severity::*;
        use Status::*;
        assert_eq!(exit_code(&[report(Theorem, VerifiedToBound)]), 0);
        assert_eq!(
            exit_code(&[
                report(Theorem, VerifiedToBound),
                report(Conjecture, Counterexample)
            ]),
            3
        );
        assert_eq!(
            exit_code(&[
                report(Theorem, Counterexample),
                report(Question, Observation)
            ]),
            1
        );
        assert_eq!(exit_code(&[]), 0);
    }

    #[test]
    fn status_serializes_kebab() {
        let s = serde_json::to_string(&Status::VerifiedToBound).unwrap();
        assert_eq!(s, "\"verified-to-bound\"");
        assert_eq!(Status::VerifiedToBound.to_string(), "verified-to-bound");
        let o = Outcome::new().check(CheckReport::passed("a", 1));
        assert_eq!(o.status(), Status::VerifiedToBound);
        assert_eq!(Outcome::new().status(), Status::Observation);
    }
}
