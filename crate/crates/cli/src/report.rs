// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Machine-readable experiment reports.
//!
//! Exact rationals are written as `"p/q"` strings and polynomials in the
//! text grammar of `gausscalc-core`. Maps are ordered, and nothing depends on
//! wall-clock time, so identical invocations give byte-identical JSON.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass | Verdict::Inconclusive => 0,
            Verdict::Fail => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub name: String,
    pub values: BTreeMap<String, Value>,
}

impl Record {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), values: BTreeMap::new() }
    }

    /// Adds an exact value (rational, polynomial, multi-index) as its text form.
    pub fn text(mut self, key: &str, v: impl Display) -> Self {
        self.values.insert(key.to_string(), Value::String(v.to_string()));
        self
    }

    pub fn float(mut self, key: &str, v: f64) -> Self {
        self.values.insert(key.to_string(), float(v));
        self
    }

    pub fn flag(mut self, key: &str, v: bool) -> Self {
        self.values.insert(key.to_string(), Value::Bool(v));
        self
    }

    pub fn int(mut self, key: &str, v: u64) -> Self {
        self.values.insert(key.to_string(), Value::from(v));
        self
    }

    pub fn value(mut self, key: &str, v: Value) -> Self {
        self.values.insert(key.to_string(), v);
        self
    }
}

/// Finite floats as JSON numbers, anything else as a string.
pub fn float(v: f64) -> Value {
    serde_json::Number::from_f64(v).map(Value::Number).unwrap_or_else(|| Value::String(v.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub results: Vec<Record>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            params: BTreeMap::new(),
            results: Vec::new(),
            verdict: Verdict::Pass,
            seed: None,
        }
    }

    pub fn param(&mut self, key: &str, v: impl Display) -> &mut Self {
        self.params.insert(key.to_string(), Value::String(v.to_string()));
        self
    }

    pub fn param_value(&mut self, key: &str, v: Value) -> &mut Self {
        self.params.insert(key.to_string(), v);
        self
    }

    pub fn push(&mut self, r: Record) {
        self.results.push(r);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialise");
        s.push('\n');
        s
    }

    /// One line per record, for standard error.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let fields: Vec<String> = r
                .values
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}={s}"),
                    other => format!("{k}={other}"),
                })
                .collect();
            out.push_str(&format!("{}: {}\n", r.name, fields.join(", ")));
        }
        out.push_str(&format!("{}: {:?}\n", self.command, self.verdict).to_lowercase());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_shape() {
        let mut r = Report::new("demo");
        r.param("s", "1/2");
        r.push(Record::new("x").text("value", "3/4").float("approx", 0.75).flag("ok", true).float("bad", f64::NAN));
        r.seed = Some(7);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["command"], "demo");
        assert_eq!(v["params"]["s"], "1/2");
        assert_eq!(v["results"][0]["values"]["value"], "3/4");
        assert_eq!(v["results"][0]["values"]["approx"], 0.75);
        assert_eq!(v["results"][0]["values"]["bad"], "NaN");
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["seed"], 7);
        assert!(Report::new("x").to_json().find("seed").is_none());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Verdict::Pass.exit_code(), 0);
        assert_eq!(Verdict::Inconclusive.exit_code(), 0);
        assert_eq!(Verdict::Fail.exit_code(), 1);
    }
}
