//! One report per invocation, rendered as text or JSON.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Serialize, Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub command: Vec<String>,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub values: BTreeMap<String, Value>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report { command, passed: true, checks: Vec::new(), values: BTreeMap::new(), elapsed_ms: 0 }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.passed &= passed;
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    pub fn value(&mut self, name: &str, v: impl Into<Value>) {
        self.values.insert(name.into(), v.into());
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command.join(" ")).unwrap();
        for c in &self.checks {
            let tag = if c.passed { "pass" } else { "FAIL" };
            match &c.detail {
                Some(d) => writeln!(out, "[{tag}] {}: {d}", c.name).unwrap(),
                None => writeln!(out, "[{tag}] {}", c.name).unwrap(),
            }
        }
        for (k, v) in &self.values {
            match v {
                Value::String(s) => writeln!(out, "{k} = {s}").unwrap(),
                other => writeln!(out, "{k} = {other}").unwrap(),
            }
        }
        writeln!(out, "status: {}", if self.passed { "pass" } else { "fail" }).unwrap();
        writeln!(out, "elapsed_ms: {}", self.elapsed_ms).unwrap();
        out
    }
}
