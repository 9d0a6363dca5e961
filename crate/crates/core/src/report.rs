//! Outcome of a bounded mathematical check.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The first input on which a check failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Named integer parameters that reproduce the failure (`n`, `m`, ...).
    pub witness: BTreeMap<String, i64>,
    pub message: String,
}

/// Result of running one check over a bounded range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    /// Number of individual instances examined.
    pub cases: u64,
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(check: impl Into<String>, cases: u64) -> Self {
        Self {
            check: check.into(),
            cases,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    pub fn failed(
        check: impl Into<String>,
        cases: u64,
        witness: &[(&str, i64)],
        message: impl Into<String>,
    ) -> Self {
        let witness = witness.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        Self {
            check: check.into(),
            cases,
            counterexample: Some(Counterexample {
                witness,
                message: message.into(),
            }),
            notes: Vec::new(),
        }
    }

    /// Passed unless `failure` holds a witness and message.
    pub fn from_outcome(
        check: impl Into<String>,
        cases: u64,
        failure: Option<(Vec<(&str, i64)>, String)>,
    ) -> Self {
        match failure {
            None => Self::passed(check, cases),
            Some((w, msg)) => Self::failed(check, cases, &w, msg),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn ok(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Folds sub-reports into one: cases add up, the first counterexample
    /// wins, and sub-report notes are kept with their check name.
    pub fn combine(check: impl Into<String>, parts: impl IntoIterator<Item = CheckReport>) -> Self {
        let mut out = Self::passed(check, 0);
        for part in parts {
            out.cases += part.cases;
            if out.counterexample.is_none() {
                if let Some(mut cx) = part.counterexample {
                    cx.message = format!("{}: {}", part.check, cx.message);
                    out.counterexample = Some(cx);
                }
            }
            for note in part.notes {
                out.notes.push(format!("{}: {}", part.check, note));
            }
        }
        out
    }

    /// Witness value by name.
    pub fn witness(&self, key: &str) -> Option<i64> {
        self.counterexample.as_ref()?.witness.get(key).copied()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: ok ({} cases)", self.check, self.cases),
            Some(cx) => {
                let w: Vec<String> = cx.witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
                write!(
                    f,
                    "{}: FAILED at {} ({})",
                    self.check,
                    w.join(" "),
                    cx.message
                )
            }
        }
    }
}
