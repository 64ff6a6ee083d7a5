//! Machine-readable verification reports.

use serde::Serialize;
use serde_json::Value;
use sextic_core::coble::RelationVariant;

/// Bumped whenever a field is renamed or removed.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        }
    }
}

/// One verdict with the claim it tests.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// The mathematical statement under test.
    pub anchor: String,
    pub verdict: Verdict,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl Check {
    pub fn new(name: &str, anchor: &str, ok: bool, reason: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            verdict: Verdict::from_bool(ok),
            reason: reason.into(),
            detail: None,
        }
    }

    pub fn skip(name: &str, anchor: &str, reason: impl Into<String>) -> Self {
        Check {
            verdict: Verdict::Skip,
            ..Check::new(name, anchor, true, reason)
        }
    }

    pub fn with_detail(mut self, detail: impl Serialize) -> Self {
        self.detail = Some(serde_json::to_value(detail).expect("serializable detail"));
        self
    }
}

/// Output of every command. Timing is deliberately absent so that two runs
/// with the same inputs serialize to identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: String,
    pub inputs: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified_relation: Option<RelationVariant>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub payload: Value,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            inputs,
            checks: Vec::new(),
            certified_relation: None,
            notes: Vec::new(),
            payload: Value::Null,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check, for terminals.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{} {}: {}\n", c.verdict.label(), c.name, c.reason));
        }
        let failed = self.checks.iter().filter(|c| c.verdict == Verdict::Fail).count();
        out.push_str(&format!(
            "{}: {} checks, {} failed\n",
            self.command,
            self.checks.len(),
            failed
        ));
        out
    }
}
