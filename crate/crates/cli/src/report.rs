//! Command reports. Keys are emitted in a fixed order so identical inputs give
//! byte-identical output.

use std::fmt::Write as _;

use leibniz_core::exactlin::format_scalar;
use leibniz_core::{Scalar, Subspace};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::files::{rows_as_strings, vector_as_strings};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub witness: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra_digest: Option<String>,
    pub checks: Vec<Check>,
    pub data: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            command: command.into(),
            seed,
            algebra_digest: None,
            checks: Vec::new(),
            data: Map::new(),
            timing_ms: None,
        }
    }

    pub fn check(&mut self, name: &str, pass: bool, witness: Value) -> bool {
        self.checks.push(Check {
            name: name.into(),
            pass,
            witness,
        });
        pass
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.data.insert(key.into(), value.into());
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "seed: {}", self.seed);
        if let Some(d) = &self.algebra_digest {
            let _ = writeln!(out, "algebra_digest: {d}");
        }
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            if c.witness.is_null() {
                let _ = writeln!(out, "[{tag}] {}", c.name);
            } else {
                let _ = writeln!(out, "[{tag}] {}: {}", c.name, c.witness);
            }
        }
        for (k, v) in &self.data {
            let _ = writeln!(out, "{k}: {v}");
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(out, "timing_ms: {t}");
        }
        out
    }
}

/// `2*e - 1/2*h'` style rendering over the basis labels.
pub fn labelled_vector(v: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format_scalar(&mag));
            out.push('*');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// RREF rows of a subspace, both as coordinates and over the basis labels.
pub fn subspace_value(s: &Subspace, labels: &[String]) -> Value {
    let vectors: Vec<String> = s.basis_vectors().map(|v| labelled_vector(v, labels)).collect();
    json!({
        "dim": s.dim(),
        "rows": rows_as_strings(s),
        "vectors": vectors,
    })
}

pub fn vector_value(v: &[Scalar], labels: &[String]) -> Value {
    json!({
        "coordinates": vector_as_strings(v),
        "vector": labelled_vector(v, labels),
    })
}
