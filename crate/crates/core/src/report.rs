//! Pass/fail check reports shared by the verification-style operations.

use std::fmt;

#[derive(Clone, Debug)]
pub struct CheckEntry {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn pass(&mut self, check: &str, detail: &str) {
        self.entries.push(CheckEntry {
            check: check.to_string(),
            passed: true,
            detail: detail.to_string(),
        });
    }

    pub fn fail(&mut self, check: &str, detail: &str) {
        self.entries.push(CheckEntry {
            check: check.to_string(),
            passed: false,
            detail: detail.to_string(),
        });
    }

    pub fn push(&mut self, check: &str, passed: bool, detail: &str) {
        if passed {
            self.pass(check, detail);
        } else {
            self.fail(check, detail);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    /// Merge with every check name prefixed, e.g. by a model name.
    pub fn merge_prefixed(&mut self, prefix: &str, other: Report) {
        for mut e in other.entries {
            e.check = format!("{prefix}: {}", e.check);
            self.entries.push(e);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let tag = if e.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag}  {}  {}", e.check, e.detail)?;
        }
        Ok(())
    }
}
