//! Verification reports: a flat list of named pass/fail checks with
//! human-readable details, serializable to JSON with stable field order.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, details: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, details: details.into() });
    }

    pub fn pass(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.push(name, true, details);
    }

    pub fn fail(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.push(name, false, details);
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.title);
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{}] {}", mark, c.name));
            if !c.details.is_empty() {
                out.push_str(&format!(": {}", c.details));
            }
            out.push('\n');
        }
        let overall = if self.passed() { "OK" } else { "FAILED" };
        out.push_str(&format!(
            "{} ({}/{} checks passed)\n",
            overall,
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        ));
        out
    }
}
