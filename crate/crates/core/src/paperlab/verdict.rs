use std::time::Duration;

use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        }
    }
}

/// Outcome of one named check or probe on one group.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub check: String,
    pub group: String,
    pub status: Status,
    /// Present on failure; probes also attach what they found on success.
    pub witness: Option<Value>,
    pub elapsed: Duration,
}

impl Verdict {
    /// Maps a check result: `Ok(None)` passes, `Ok(Some(w))` fails with
    /// witness `w`, a resource cap skips, and any other error fails with
    /// the error text as witness.
    pub fn from_outcome(
        check: &str,
        group: &str,
        outcome: Result<Option<Value>>,
        elapsed: Duration,
    ) -> Verdict {
        let (status, witness) = match outcome {
            Ok(None) => (Status::Pass, None),
            Ok(Some(w)) => (Status::Fail, Some(w)),
            Err(Error::ResourceCap(reason)) => (Status::Skipped(reason), None),
            Err(e) => (Status::Fail, Some(json!({ "error": e.to_string() }))),
        };
        Verdict {
            check: check.to_string(),
            group: group.to_string(),
            status,
            witness,
            elapsed,
        }
    }

    pub fn skipped(check: &str, group: &str, reason: impl Into<String>) -> Verdict {
        Verdict {
            check: check.to_string(),
            group: group.to_string(),
            status: Status::Skipped(reason.into()),
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, Status::Skipped(_))
    }

    /// `ms` is only filled in when `timings` is set, so that default output
    /// is reproducible byte for byte.
    pub fn to_json(&self, timings: bool) -> Value {
        let mut out = json!({
            "check": self.check,
            "group": self.group,
            "status": self.status.as_str(),
            "witness": self.witness,
            "ms": if timings { json!(self.elapsed.as_secs_f64() * 1000.0) } else { Value::Null },
        });
        if let Status::Skipped(reason) = &self.status {
            out["reason"] = json!(reason);
        }
        out
    }
}

/// Counts of `(passed, failed, skipped)`.
pub fn tally(verdicts: &[Verdict]) -> (usize, usize, usize) {
    verdicts.iter().fold((0, 0, 0), |(p, f, s), v| match v.status {
        Status::Pass => (p + 1, f, s),
        Status::Fail => (p, f + 1, s),
        Status::Skipped(_) => (p, f, s + 1),
    })
}
