//! Run reports and the exit-code contract.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Unknown,
    Fail,
}

impl Status {
    pub fn of(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status) -> Self {
        Check { name: name.into(), status, detail: None, witness: None }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn witness(mut self, w: impl Serialize) -> Self {
        self.witness = serde_json::to_value(w).ok();
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub checks: Vec<Check>,
    pub data: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    /// extra lines for the prose rendering only
    #[serde(skip)]
    pub text: Option<String>,
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// 0 when everything passes, 1 on any failure, 2 when something is unknown and nothing failed.
pub fn exit_code(statuses: impl IntoIterator<Item = Status>) -> i32 {
    match statuses.into_iter().max() {
        Some(Status::Fail) => EXIT_FAIL,
        Some(Status::Unknown) => EXIT_UNKNOWN,
        _ => EXIT_PASS,
    }
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport { command, checks: Vec::new(), data: Map::new(), timing_ms: None, text: None }
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn put(&mut self, key: &str, v: impl Serialize) {
        self.data.insert(key.into(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn exit_code(&self) -> i32 {
        exit_code(self.checks.iter().map(|c| c.status))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn prose(&self) -> String {
        let mut out = format!("hopfsmith {}\n", self.command.join(" "));
        for (k, v) in &self.data {
            let shown = match v {
                Value::String(s) => s.clone(),
                v if v.to_string().len() <= 100 => v.to_string(),
                _ => "(see --json)".into(),
            };
            out.push_str(&format!("  {k}: {shown}\n"));
        }
        if let Some(t) = &self.text {
            out.push_str(t);
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Unknown => "UNKNOWN",
            };
            out.push_str(&format!("  [{tag}] {}", c.name));
            if let Some(d) = &c.detail {
                out.push_str(&format!(": {d}"));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!(" witness {w}"));
            }
            out.push('\n');
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("  time: {t:.1} ms\n"));
        }
        out
    }
}
