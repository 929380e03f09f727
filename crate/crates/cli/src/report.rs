use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// A documented deviation from a prediction; never fails the run.
    Flagged,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Flagged => "FLAG",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The braid or `(p,q)` the check ran on.
    pub subject: String,
    pub status: Status,
    pub details: String,
}

impl Check {
    pub fn new(name: &str, subject: impl Into<String>, status: Status, details: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            subject: subject.into(),
            status,
            details: details.into(),
        }
    }

    pub fn of(name: &str, subject: impl Into<String>, ok: bool, details: impl Into<String>) -> Self {
        Check::new(name, subject, Status::from_bool(ok), details)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub flagged: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts the checks so the report does not depend on evaluation order.
    pub fn new(mut checks: Vec<Check>) -> Self {
        checks.sort();
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Flagged => summary.flagged += 1,
                Status::Fail => summary.fail += 1,
            }
        }
        VerificationReport { checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let parsed: VerificationReport = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let rebuilt = VerificationReport::new(parsed.checks.clone());
        if rebuilt.summary != parsed.summary {
            return Err("summary does not match the checks".into());
        }
        Ok(rebuilt)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{}  {:<28} {:<12} {}", c.status.label(), c.name, c.subject, c.details);
        }
        let s = self.summary;
        let _ = writeln!(out, "{} pass, {} flagged, {} fail", s.pass, s.flagged, s.fail);
        out
    }
}
