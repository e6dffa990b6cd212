//! Report assembly and table/json/csv rendering.

use std::time::Duration;

use serde_json::{Map, Value};

use crate::args::Format;

/// Everything a finished command hands back for rendering.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub inputs: Value,
    pub payload: Value,
    pub cost_estimate: Option<u128>,
    pub budget: u64,
    pub wall: Duration,
}

impl RunReport {
    /// The report in the requested format; wall time is never part of it.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Table => self.render_table(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_json(&self) -> String {
        let mut top = Map::new();
        top.insert("budget".into(), Value::from(self.budget));
        let cost = match self.cost_estimate {
            Some(c) => Value::from(c.to_string()),
            None => Value::Null,
        };
        top.insert("cost_estimate".into(), cost);
        top.insert("inputs".into(), self.inputs.clone());
        top.insert("result".into(), self.payload.clone());
        Value::Object(top).to_string()
    }

    fn render_table(&self) -> String {
        // a command may nominate a single human-facing line via "display"
        if let Some(Value::String(s)) = self.payload.get("display") {
            return s.clone();
        }
        let mut rows = Vec::new();
        flatten("", &self.inputs, &mut rows);
        flatten("", &self.payload, &mut rows);
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:width$}  {v}"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    fn render_csv(&self) -> String {
        let mut rows = vec![("budget".to_string(), self.budget.to_string())];
        if let Some(c) = self.cost_estimate {
            rows.push(("cost_estimate".to_string(), c.to_string()));
        }
        flatten("inputs", &self.inputs, &mut rows);
        flatten("result", &self.payload, &mut rows);
        let mut out = String::from("key,value");
        for (k, v) in rows {
            out.push('\n');
            out.push_str(&csv_field(&k));
            out.push(',');
            out.push_str(&csv_field(&v));
        }
        out
    }
}

// depth-first walk producing dotted keys and scalar strings
fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    let key = |part: &str| {
        if prefix.is_empty() {
            part.to_string()
        } else {
            format!("{prefix}.{part}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, rows);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&format!("[{i}]")), v, rows);
            }
        }
        Value::Array(items) => {
            let joined = items.iter().map(scalar).collect::<Vec<_>>().join("; ");
            rows.push((prefix.to_string(), format!("[{joined}]")));
        }
        other => rows.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

// ---- tests ----
