//! Report assembly and rendering.
//!
//! Every command produces one `AnalysisReport`: the command name, a
//! digest of each input file, the seed when a randomized search ran,
//! and a structured results payload. The JSON form is the payload
//! serialized as-is; the text form is a stable, indented rendering of
//! the same tree. Both are byte-for-byte reproducible for identical
//! inputs and seed.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// A named input file with the digest of its bytes.
#[derive(Debug, Clone)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Reads and hashes one input file.
pub fn digest_file(path: &Path) -> std::io::Result<InputDigest> {
    let bytes = std::fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(InputDigest {
        path: path.display().to_string(),
        sha256: hex::encode(hasher.finalize()),
    })
}

/// The full report for one command invocation.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub seed: Option<u64>,
    pub results: Value,
}

impl AnalysisReport {
    pub fn to_value(&self) -> Value {
        let mut object = Map::new();
        object.insert("command".to_string(), Value::String(self.command.clone()));
        object.insert(
            "inputs".to_string(),
            Value::Array(
                self.inputs
                    .iter()
                    .map(|i| {
                        let mut input = Map::new();
                        input.insert("path".to_string(), Value::String(i.path.clone()));
                        input.insert("sha256".to_string(), Value::String(i.sha256.clone()));
                        Value::Object(input)
                    })
                    .collect(),
            ),
        );
        if let Some(seed) = self.seed {
            object.insert("seed".to_string(), Value::from(seed));
        }
        object.insert("results".to_string(), self.results.clone());
        Value::Object(object)
    }

    pub fn render_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_value())
            .expect("reports contain no non-serializable values");
        text.push('\n');
        text
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for input in &self.inputs {
            let _ = writeln!(out, "input: {} sha256={}", input.path, input.sha256);
        }
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed: {seed}");
        }
        render_value(&self.results, 0, Some("results"), &mut out);
        out
    }
}

fn scalar_text(value: &Value) -> Option<String> {
    match value {
        Value::Null => Some("none".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn inline_array(values: &[Value]) -> Option<String> {
    let parts: Option<Vec<String>> = values.iter().map(scalar_text).collect();
    parts.map(|p| format!("[{}]", p.join(", ")))
}

fn render_value(value: &Value, indent: usize, key: Option<&str>, out: &mut String) {
    let pad = "  ".repeat(indent);
    let prefix = match key {
        Some(k) => format!("{pad}{k}"),
        None => pad.clone(),
    };
    if let Some(text) = scalar_text(value) {
        let _ = match key {
            Some(_) => writeln!(out, "{prefix}: {text}"),
            None => writeln!(out, "{prefix}{text}"),
        };
        return;
    }
    match value {
        Value::Array(items) => {
            if let Some(inline) = inline_array(items) {
                let _ = match key {
                    Some(_) => writeln!(out, "{prefix}: {inline}"),
                    None => writeln!(out, "{prefix}{inline}"),
                };
                return;
            }
            if let Some(k) = key {
                let _ = writeln!(out, "{pad}{k}:");
            }
            // A matrix (array of scalar rows) prints one row per line;
            // anything else prints indexed items.
            let all_rows = items
                .iter()
                .all(|i| matches!(i, Value::Array(row) if inline_array(row).is_some()));
            if all_rows && !items.is_empty() {
                for item in items {
                    if let Value::Array(row) = item {
                        let _ = writeln!(
                            out,
                            "{pad}  {}",
                            inline_array(row).expect("checked scalar rows")
                        );
                    }
                }
            } else if items.is_empty() {
                let _ = writeln!(out, "{pad}  (empty)");
            } else {
                for (i, item) in items.iter().enumerate() {
                    render_value(item, indent + 1, Some(&format!("[{i}]")), out);
                }
            }
        }
        Value::Object(map) => {
            if let Some(k) = key {
                let _ = writeln!(out, "{pad}{k}:");
            }
            for (k, v) in map {
                render_value(v, indent + 1, Some(k), out);
            }
        }
        _ => unreachable!("scalars were handled above"),
    }
}
