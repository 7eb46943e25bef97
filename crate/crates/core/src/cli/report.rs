//! Output assembly.
//!
//! JSON: `{"command", "config", "verdict", "witnesses": [..], "values": ..}`, big
//! numbers as decimal strings. CSV: a header line, then one record per row or
//! per witness, depending on the command. Text: human-readable summary.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    /// Commands that only print data.
    None,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn and(self, ok: bool) -> Self {
        match (self, ok) {
            (_, false) | (Verdict::Fails, _) => Verdict::Fails,
            _ => Verdict::Holds,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Fails => 1,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub config: Value,
    pub verdict: Verdict,
    pub witnesses: Vec<Value>,
    pub values: Value,
    pub text: String,
    pub csv: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: &'a str,
    config: &'a Value,
    verdict: Verdict,
    witnesses: &'a [Value],
    values: &'a Value,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Report {
    pub fn new(command: &'static str, config: Value) -> Self {
        Self {
            command,
            config,
            verdict: Verdict::None,
            witnesses: Vec::new(),
            values: Value::Null,
            text: String::new(),
            csv: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.text, "{}", s.as_ref());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let r = JsonReport {
                    command: self.command,
                    config: &self.config,
                    verdict: self.verdict,
                    witnesses: &self.witnesses,
                    values: &self.values,
                };
                let mut s = serde_json::to_string_pretty(&r).expect("report values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = String::new();
                for rec in &self.csv {
                    let fields: Vec<String> = rec.iter().map(|f| csv_field(f)).collect();
                    let _ = writeln!(s, "{}", fields.join(","));
                }
                s
            }
            Format::Text => {
                let mut s = self.text.clone();
                if self.verdict != Verdict::None {
                    let word = if self.verdict == Verdict::Holds { "holds" } else { "fails" };
                    let _ = writeln!(s, "verdict: {word}");
                }
                s
            }
        }
    }
}
