//! Reports: one verdict plus the evidence behind it.
//!
//! The structured form is a JSON object
//!
//! ```json
//! {"schema": 1, "command": "...", "args": {...}, "verdict": "pass" | "fail", "evidence": {...}}
//! ```
//!
//! with object keys in sorted order and no timing, so reruns are byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::document::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub args: BTreeMap<String, Value>,
    pub verdict: bool,
    pub evidence: Value,
}

impl Report {
    pub fn new(command: &'static str, verdict: bool, evidence: Value) -> Self {
        Report {
            command,
            args: BTreeMap::new(),
            verdict,
            evidence,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.verdict {
            0
        } else {
            1
        }
    }

    pub fn verdict_word(&self) -> &'static str {
        if self.verdict {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "args": self.args,
            "verdict": self.verdict_word(),
            "evidence": sorted(&self.evidence),
        })
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.verdict_word().to_uppercase());
        for (k, v) in &self.args {
            let _ = writeln!(out, "  {k} = {}", inline(v));
        }
        render(&mut out, &self.evidence, 1);
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Structured => self.to_structured(),
        }
    }
}

/// Rebuilds objects key by key in sorted order, whatever map type backs `Value`.
fn sorted(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let keys: BTreeMap<&String, &Value> = m.iter().collect();
            Value::Object(
                keys.into_iter()
                    .map(|(k, v)| (k.clone(), sorted(v)))
                    .collect(),
            )
        }
        Value::Array(items) => Value::Array(items.iter().map(sorted).collect()),
        other => other.clone(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_flat) && items.len() <= 16,
        Value::Object(m) => m.is_empty(),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            let keys: BTreeMap<&String, &Value> = m.iter().collect();
            for (k, child) in keys {
                if is_flat(child) {
                    let _ = writeln!(out, "{pad}{k}: {}", inline(child));
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    render(out, child, depth + 1);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    let _ = writeln!(out, "{pad}- {}", inline(item));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render(out, item, depth + 1);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other));
        }
    }
}
