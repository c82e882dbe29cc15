use std::fmt::Write as _;

use qgrass::{GradedPoly, LaurentPoly};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Plain,
    Csv,
}

/// Whether a verification embedded in a command held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Violated,
}

/// Result of one subcommand, renderable in every output format.
pub struct Report {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub result: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(command: &str, parameters: Map<String, Value>) -> Self {
        Report {
            command: command.to_string(),
            parameters,
            result: Value::Null,
            header: Vec::new(),
            rows: Vec::new(),
            text: String::new(),
            verdict: Verdict::Ok,
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn table(&mut self, header: &[&str], rows: Vec<Vec<String>>) {
        self.header = header.iter().map(|s| s.to_string()).collect();
        self.rows = rows;
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let envelope = json!({
                    "command": self.command,
                    "parameters": self.parameters,
                    "result": self.result,
                    "version": env!("CARGO_PKG_VERSION"),
                });
                let mut s = serde_json::to_string_pretty(&envelope).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Plain => self.text.clone(),
            Format::Csv => {
                let mut s = String::new();
                if self.header.is_empty() {
                    s.push_str("key,value\n");
                    if let Value::Object(map) = &self.result {
                        for (k, v) in map {
                            let v = match v {
                                Value::String(x) => x.clone(),
                                other => other.to_string(),
                            };
                            let _ = writeln!(s, "{},{}", csv_field(k), csv_field(&v));
                        }
                    }
                } else {
                    let _ = writeln!(s, "{}", self.header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(","));
                    for row in &self.rows {
                        let _ = writeln!(s, "{}", row.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
                    }
                }
                s
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn graded_json(p: &GradedPoly) -> Value {
    json!({
        "coefficients": p.coeffs(),
        "polynomial": p.to_string(),
    })
}

pub fn laurent_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            let coefficient = i64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::String(c.to_string()));
            json!({ "exponents": e, "coefficient": coefficient })
        })
        .collect();
    json!({ "text": p.to_string(), "terms": terms })
}

pub fn joined(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
