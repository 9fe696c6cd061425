//! Verification reports: one per case, each a list of named checks.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Green,
    Red,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Counterexample when red; otherwise a short summary of what was seen.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(case: impl Into<String>) -> Self {
        Report { case: case.into(), checks: Vec::new() }
    }

    pub fn green(&mut self, name: impl Into<String>, note: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Green, witness: Some(note.into()) });
    }

    pub fn red(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Red, witness: Some(witness.into()) });
    }

    /// Green with `note` when `ok`, red with `witness` otherwise.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, note: impl Into<String>, witness: impl FnOnce() -> String) {
        if ok {
            self.green(name, note);
        } else {
            self.red(name, witness());
        }
    }

    pub fn is_green(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Green)
    }

    pub fn first_red(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Red)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.case);
        for c in &self.checks {
            let tag = match c.status {
                Status::Green => "ok ",
                Status::Red => "RED",
            };
            match &c.witness {
                Some(w) if !w.is_empty() => s.push_str(&format!("  [{tag}] {}: {w}\n", c.name)),
                _ => s.push_str(&format!("  [{tag}] {}\n", c.name)),
            }
        }
        s
    }
}
