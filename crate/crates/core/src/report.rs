//! Verification reports.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;

use crate::factormap::{Coincidence, Witness};
use crate::QLin;

/// Failure details kept per check.
pub const MAX_FAILURE_DETAILS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub samples: usize,
    pub passes: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub tallies: BTreeMap<String, u64>,
    /// Checks that are not failures but did not run at all.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl CheckRecord {
    pub fn new(check: impl Into<String>) -> Self {
        CheckRecord {
            check: check.into(),
            samples: 0,
            passes: 0,
            failures: Vec::new(),
            tallies: BTreeMap::new(),
            skipped: None,
        }
    }

    pub fn skipped(check: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckRecord {
            skipped: Some(reason.into()),
            ..CheckRecord::new(check)
        }
    }

    /// Records one sample.
    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.samples += 1;
        if ok {
            self.passes += 1;
        } else if self.failures.len() < MAX_FAILURE_DETAILS {
            self.failures.push(detail());
        }
    }

    pub fn tally(&mut self, key: impl Into<String>) {
        *self.tallies.entry(key.into()).or_default() += 1;
    }

    pub fn count(&self, key: &str) -> u64 {
        self.tallies.get(key).copied().unwrap_or(0)
    }

    /// Adds a failure not tied to a sample.
    pub fn fail(&mut self, detail: impl Into<String>) {
        self.samples += 1;
        if self.failures.len() < MAX_FAILURE_DETAILS {
            self.failures.push(detail.into());
        }
    }

    pub fn passed(&self) -> bool {
        self.passes == self.samples
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureComparison {
    pub fixture: String,
    pub expected: Vec<QLin>,
    pub computed: Vec<QLin>,
    pub matches: bool,
}

impl FixtureComparison {
    pub fn new(fixture: impl Into<String>, expected: Vec<QLin>, computed: Vec<QLin>) -> Self {
        let matches = expected == computed;
        FixtureComparison {
            fixture: fixture.into(),
            expected,
            computed,
            matches,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub radius: usize,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub bound: u32,
    pub source_lengths: Vec<QLin>,
    pub target_lengths: Vec<QLin>,
    pub coincidences: usize,
    /// The first few coincidences, in sorted order.
    pub sample: Vec<Coincidence>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub command: String,
    pub example: u8,
    pub code: String,
    pub seed: u64,
    pub generator: String,
    pub samples: usize,
    pub status: Status,
    pub checks: Vec<CheckRecord>,
    pub fixtures: Vec<FixtureComparison>,
    pub witnesses: Vec<WitnessRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanRecord>,
    /// Wall-clock seconds; omitted by default so reports are reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_secs: Option<f64>,
}

impl ReportDocument {
    /// Recomputes the overall status from the checks and fixtures.
    pub fn finish(&mut self) {
        let ok = self.checks.iter().all(CheckRecord::passed) && self.fixtures.iter().all(|f| f.matches);
        self.status = if ok { Status::Pass } else { Status::Fail };
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check == name)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> io::Result<()> {
        out.write_all(self.to_json().as_bytes())?;
        out.write_all(b"\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_capped() {
        let mut c = CheckRecord::new("x");
        for i in 0..50 {
            c.record(i % 2 == 0, || format!("case {i}"));
        }
        assert_eq!(c.samples, 50);
        assert_eq!(c.passes, 25);
        assert_eq!(c.failures.len(), MAX_FAILURE_DETAILS);
        assert!(!c.passed());
        assert!(CheckRecord::skipped("y", "n/a").passed());
    }
}
