//! Pass/fail records shared by the verification routines.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

/// One checked statement about one subject.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub subject: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A named collection of checks plus free-form numeric facts (cardinalities, ranks).
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    pub facts: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), ..Self::default() }
    }

    pub fn check(&mut self, name: impl Into<String>, subject: impl Into<String>, passed: bool) {
        self.checks.push(Check { name: name.into(), subject: subject.into(), passed, detail: None });
    }

    pub fn check_with(
        &mut self,
        name: impl Into<String>,
        subject: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            subject: subject.into(),
            passed,
            detail: Some(detail.into()),
        });
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.facts.insert(key.into(), value.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        for (k, v) in other.facts {
            self.facts.insert(format!("{}.{k}", other.title), v);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn count(&self) -> usize {
        self.checks.len()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        writeln!(f, "{}: {} checks, {} failed", self.title, self.count(), failed)?;
        for c in self.failures() {
            write!(f, "  FAIL {} [{}]", c.name, c.subject)?;
            if let Some(d) = &c.detail {
                write!(f, ": {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
