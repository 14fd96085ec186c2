//! Deterministic reports: sorted key/value fields plus an ordered list of
//! hard assertions. Machine output is stable JSON; text output is one
//! key/value per line. Timing is deliberately omitted from both so reports
//! are byte-identical across runs with the same inputs and seed.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub fields: BTreeMap<String, String>,
    pub assertions: Vec<Assertion>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Report {
        let mut fields = BTreeMap::new();
        fields.insert("command".to_string(), command.to_string());
        fields.insert("seed".to_string(), seed.to_string());
        fields.insert("timing".to_string(), "omitted-for-determinism".to_string());
        Report {
            fields,
            assertions: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.fields.insert(key.to_string(), value.to_string());
    }

    pub fn check(&mut self, name: &str, passed: bool) {
        self.assertions.push(Assertion {
            name: name.to_string(),
            passed,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                for (k, v) in &self.fields {
                    out.push_str(&format!("{k}: {v}\n"));
                }
                for a in &self.assertions {
                    let mark = if a.passed { "pass" } else { "FAIL" };
                    out.push_str(&format!("[{mark}] {a}\n", a = a.name));
                }
                out
            }
        }
    }
}
