use std::time::Duration;

use cb_core::verify::Check;
use serde_json::{json, Map, Value};

/// What every command prints: rendered lines for humans, a structured
/// result for `--json`, and the outcome of any checks it ran.
#[derive(Default)]
pub struct Report {
    pub command: Vec<String>,
    pub lines: Vec<String>,
    pub result: Map<String, Value>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report {
            command,
            ..Report::default()
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.result.insert(key.to_string(), v);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            match &c.witness {
                Some(w) if !c.pass => out.push_str(&format!("[{tag}] {}: {w}\n", c.name)),
                _ => out.push_str(&format!("[{tag}] {}\n", c.name)),
            }
        }
        if !self.checks.is_empty() {
            let ok = self.checks.iter().filter(|c| c.pass).count();
            out.push_str(&format!("{ok}/{} checks passed\n", self.checks.len()));
        }
        if let Some(t) = self.elapsed {
            out.push_str(&format!("elapsed: {:.3}s\n", t.as_secs_f64()));
        }
        out
    }

    pub fn render_json(&self) -> String {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "pass": c.pass, "witness": c.witness }))
            .collect();
        let mut v = json!({
            "schema": 1,
            "command": self.command,
            "result": Value::Object(self.result.clone()),
            "checks": checks,
            "pass": self.passed(),
        });
        if !self.warnings.is_empty() {
            v["warnings"] = json!(self.warnings);
        }
        if let Some(t) = self.elapsed {
            v["elapsed_ms"] = json!(t.as_millis() as u64);
        }
        serde_json::to_string_pretty(&v).expect("JSON values always serialise") + "\n"
    }
}
