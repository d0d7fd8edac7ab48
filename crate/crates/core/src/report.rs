//! Machine-readable check reports shared by all verifiers and the CLI.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::Error;

pub const SCHEMA_VERSION: u32 = 1;

/// Default number of witnesses kept per check.
pub const DEFAULT_WITNESS_CAP: usize = 32;

/// A bounded list of human-readable violation witnesses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub items: Vec<String>,
    pub truncated: bool,
    #[serde(skip)]
    cap: Option<usize>,
}

impl Witnesses {
    pub fn with_cap(cap: usize) -> Self {
        Witnesses {
            items: Vec::new(),
            truncated: false,
            cap: Some(cap),
        }
    }

    pub fn push(&mut self, item: impl Into<String>) {
        if self.items.len() < self.cap.unwrap_or(DEFAULT_WITNESS_CAP) {
            self.items.push(item.into());
        } else {
            self.truncated = true;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty() && !self.truncated
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn extend(&mut self, other: &Witnesses) {
        for item in &other.items {
            self.push(item.clone());
        }
        self.truncated |= other.truncated;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Precondition,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::Precondition => "precondition",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub witnesses: Witnesses,
    pub timing_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub suite: String,
    pub k: usize,
    pub l: usize,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, k: usize, l: usize) -> Self {
        SuiteReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.into(),
            k,
            l,
            seed: None,
            checks: Vec::new(),
        }
    }

    /// Runs `f`, timing it, and records the outcome. `Ok((true, ..))` is a
    /// pass, `Ok((false, ..))` a failure; a precondition error becomes
    /// [`Status::Precondition`] and any other error a failure.
    pub fn run(
        &mut self,
        name: impl Into<String>,
        f: impl FnOnce() -> Result<(bool, String, Witnesses), Error>,
    ) -> Status {
        let start = Instant::now();
        let outcome = f();
        let timing_ms = start.elapsed().as_secs_f64() * 1e3;
        let (status, detail, witnesses) = match outcome {
            Ok((true, detail, w)) => (Status::Pass, detail, w),
            Ok((false, detail, w)) => (Status::Fail, detail, w),
            Err(Error::Precondition(msg)) => (Status::Precondition, msg, Witnesses::default()),
            Err(e) => (Status::Fail, e.to_string(), Witnesses::default()),
        };
        self.checks.push(Check {
            name: name.into(),
            status,
            detail,
            witnesses,
            timing_ms,
        });
        status
    }

    pub fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Skip,
            detail: why.into(),
            witnesses: Witnesses::default(),
            timing_ms: 0.0,
        });
    }

    pub fn merge(&mut self, other: SuiteReport) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.checks.push(c);
        }
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<13} {:<48} {:>9.1} ms  {}\n",
                c.status.to_string().to_uppercase(),
                c.name,
                c.timing_ms,
                c.detail
            ));
            for w in &c.witnesses.items {
                out.push_str(&format!("{:<13}   - {w}\n", ""));
            }
            if c.witnesses.truncated {
                out.push_str(&format!("{:<13}   - ... (truncated)\n", ""));
            }
        }
        out
    }
}
