//! Machine-readable run reports: one record per executed check, with a
//! summary and sha256 hashes of all file inputs.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub subject: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sub: Option<serde_json::Value>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

/// Collects check outcomes in execution order.
pub struct Reporter {
    pub checks: Vec<CheckRecord>,
}

impl Reporter {
    pub fn new() -> Self {
        Reporter { checks: Vec::new() }
    }

    /// Run one check. `f` returns an optional witness string on success; an
    /// error marks the check failed with the error text as witness.
    pub fn run<F>(&mut self, id: &str, subject: &str, f: F)
    where
        F: FnOnce() -> anyhow::Result<Option<String>>,
    {
        let start = Instant::now();
        let (status, witness) = match f() {
            Ok(w) => (Status::Pass, w),
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        self.checks.push(CheckRecord {
            id: id.to_string(),
            subject: subject.to_string(),
            status,
            witness,
            elapsed_ms: start.elapsed().as_millis(),
        });
    }

    pub fn record(
        &mut self,
        id: &str,
        subject: &str,
        status: Status,
        witness: Option<String>,
        elapsed_ms: u128,
    ) {
        self.checks.push(CheckRecord {
            id: id.to_string(),
            subject: subject.to_string(),
            status,
            witness,
            elapsed_ms,
        });
    }

    pub fn skip(&mut self, id: &str, subject: &str, reason: &str) {
        self.checks.push(CheckRecord {
            id: id.to_string(),
            subject: subject.to_string(),
            status: Status::Skipped,
            witness: Some(reason.to_string()),
            elapsed_ms: 0,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn summary(&self) -> Summary {
        Summary {
            passed: self.checks.iter().filter(|c| c.status == Status::Pass).count(),
            failed: self.checks.iter().filter(|c| c.status == Status::Fail).count(),
            skipped: self
                .checks
                .iter()
                .filter(|c| c.status == Status::Skipped)
                .count(),
        }
    }

    pub fn into_report(self, inputs: BTreeMap<String, String>) -> Report {
        let summary = self.summary();
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            inputs,
            algebra: None,
            sub: None,
            checks: self.checks,
            summary,
        }
    }
}
