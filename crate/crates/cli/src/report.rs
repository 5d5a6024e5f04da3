use std::fmt::Write as _;

use serde_json::{json, Map, Value};

/// Result of one command: what was asked, the canonical inputs, and the
/// payload. Field order is insertion order, so output is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub verb: String,
    pub inputs: Vec<String>,
    pub result: Map<String, Value>,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn to_json(&self) -> String {
        let v = json!({
            "verb": self.verb,
            "inputs": self.inputs,
            "result": self.result,
            "elapsed_ms": self.elapsed_ms,
        });
        let mut s = serde_json::to_string_pretty(&v).expect("serializable");
        s.push('\n');
        s
    }

    /// Human-readable form. Timing is left out so reruns are byte-identical.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.result.len() == 1 {
            if let Some(v) = self.result.get("value") {
                out.push_str(&scalar(v));
                out.push('\n');
                return out;
            }
        }
        for (key, v) in &self.result {
            match v {
                Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                    let _ = writeln!(out, "{key}:");
                    out.push_str(&table(items));
                }
                Value::Array(items) => {
                    let _ = writeln!(out, "{key}:");
                    for item in items {
                        let _ = writeln!(out, "  {}", scalar(item));
                    }
                }
                _ => {
                    let _ = writeln!(out, "{key}: {}", scalar(v));
                }
            }
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn table(rows: &[Value]) -> String {
    let header: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let obj = r.as_object().unwrap();
            header.iter().map(|k| obj.get(*k).map(scalar).unwrap_or_default()).collect()
        })
        .collect();
    let widths: Vec<usize> = header
        .iter()
        .enumerate()
        .map(|(i, h)| cells.iter().map(|row| row[i].len()).chain([h.len()]).max().unwrap())
        .collect();
    let line = |items: Vec<&str>| {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.iter().map(|h| h.as_str()).collect());
    for row in &cells {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
