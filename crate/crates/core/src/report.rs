//! Outcome of an identity check over a parameter set.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub at: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(identity: impl Into<String>) -> Self {
        Report {
            identity: identity.into(),
            params: BTreeMap::new(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Records one comparison. `at` is only rendered on failure.
    pub fn check<T: PartialEq + fmt::Display>(
        &mut self,
        at: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) -> bool {
        self.checks += 1;
        let ok = expected == actual;
        if !ok {
            self.failures.push(Failure {
                at: at(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
        ok
    }

    pub fn check_that(&mut self, at: impl FnOnce() -> String, ok: bool, detail: &str) -> bool {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                at: at(),
                expected: "true".into(),
                actual: detail.to_string(),
            });
        }
        ok
    }

    /// Folds another report's checks and failures into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.identity)?;
        if !self.params.is_empty() {
            let params: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, " ({})", params.join(", "))?;
        }
        write!(f, " [{} checks]", self.checks)?;
        if let Some(first) = self.failures.first() {
            write!(
                f,
                "; first counterexample at {}: expected {}, got {}",
                first.at, first.expected, first.actual
            )?;
        }
        Ok(())
    }
}
