//! Line-oriented reports with a final verdict.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Obstruction,
    Error,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Obstruction => "obstruction",
            Verdict::Error => "error",
        }
    }
}

/// Ordered `key: value` entries, certificates and a verdict.
///
/// The verdict is `obstruction` as soon as a certificate is recorded, and
/// `error` once an error is attached.
#[derive(Clone, Debug, Default)]
pub struct Report {
    entries: Vec<(String, Value)>,
    certificates: Vec<String>,
    error: Option<Error>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn line(&mut self, key: impl Into<String>, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.entries.push((key.into(), value));
    }

    pub fn certificate(&mut self, text: impl Into<String>) {
        self.certificates.push(text.into());
    }

    pub fn fail(&mut self, e: Error) {
        if self.error.is_none() {
            self.error = Some(e);
        }
    }

    pub fn error(&self) -> Option<&Error> {
        self.error.as_ref()
    }

    pub fn certificates(&self) -> &[String] {
        &self.certificates
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn verdict(&self) -> Verdict {
        if self.error.is_some() {
            Verdict::Error
        } else if self.certificates.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Obstruction
        }
    }

    pub fn exit_code(&self) -> i32 {
        match (&self.error, self.verdict()) {
            (Some(e), _) => e.exit_code(),
            (None, Verdict::Obstruction) => 1,
            _ => 0,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push_str(": ");
            match v {
                Value::String(s) => out.push_str(s),
                other => out.push_str(&other.to_string()),
            }
            out.push('\n');
        }
        for c in &self.certificates {
            out.push_str("certificate: ");
            out.push_str(c);
            out.push('\n');
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        out.push_str(&format!("VERDICT: {}\n", self.verdict().as_str()));
        out
    }

    pub fn to_json(&self) -> String {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(k, v)| json!({ "key": k, "value": v }))
            .collect();
        let value = json!({
            "entries": entries,
            "certificates": self.certificates,
            "error": self.error.as_ref().map(|e| e.to_string()),
            "verdict": self.verdict(),
        });
        let mut s = serde_json::to_string_pretty(&value).expect("json");
        s.push('\n');
        s
    }
}
