//! Machine-readable verification reports.
//!
//! A violated identity is data, not an error: it lands here as a failed
//! [`Check`] carrying the first offending matrix entry.

use serde::Serialize;

use crate::exactnum::RadicalSum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First nonzero entry of a residual (or the first mismatching value).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub row: String,
    pub column: String,
    pub residual: RadicalSum,
    pub residual_text: String,
}

impl Counterexample {
    pub fn new(row: impl ToString, column: impl ToString, residual: RadicalSum) -> Self {
        let residual_text = residual.to_string();
        Counterexample {
            row: row.to_string(),
            column: column.to_string(),
            residual,
            residual_text,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub relation: String,
    pub indices: Vec<usize>,
    pub signs: Vec<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Highest source level on which the identity was asserted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_level: Option<i64>,
}

impl Check {
    pub fn new(relation: impl Into<String>) -> Self {
        Check {
            relation: relation.into(),
            indices: Vec::new(),
            signs: Vec::new(),
            status: Status::Pass,
            counterexample: None,
            max_level: None,
        }
    }

    pub fn indices(mut self, indices: &[usize]) -> Self {
        self.indices = indices.to_vec();
        self
    }

    pub fn signs(mut self, signs: &[i64]) -> Self {
        self.signs = signs
            .iter()
            .map(|&s| if s > 0 { "+".into() } else { "-".into() })
            .collect();
        self
    }

    pub fn max_level(mut self, level: i64) -> Self {
        self.max_level = Some(level);
        self
    }

    pub fn outcome(mut self, counterexample: Option<Counterexample>) -> Self {
        self.status = if counterexample.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        self.counterexample = counterexample;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        format!(
            "{}: {} checks, {} failed",
            self.suite,
            self.checks.len(),
            failed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mut r = Report::new("demo");
        r.push(Check::new("ok").indices(&[1, 2]).signs(&[1, -1]));
        r.push(Check::new("bad").outcome(Some(Counterexample::new("a", "b", RadicalSum::one()))));
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["checks"][0]["signs"][1], "-");
        assert!(v["checks"][0].get("counterexample").is_none());
        assert_eq!(v["checks"][1]["status"], "fail");
        assert_eq!(v["checks"][1]["counterexample"]["residual_text"], "1");
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }
}
