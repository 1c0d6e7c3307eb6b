//! Verification reports: failures are data, never panics.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub max_degree: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(suite: impl Into<String>, max_degree: usize) -> Self {
        Report {
            suite: suite.into(),
            max_degree,
            checks: 0,
            failures: Vec::new(),
        }
    }

    /// Records one check. The identity and witness are only built on failure.
    pub fn check(&mut self, ok: bool, identity: impl FnOnce() -> String, witness: impl FnOnce() -> Value) -> bool {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                identity: identity(),
                witness: witness(),
            });
        }
        ok
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds another report's counts and failures into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
