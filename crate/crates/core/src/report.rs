//! Check reports shared by the verification routines and the CLI.

use serde::{Deserialize, Serialize};

/// One failed check: the tuple that was tested and the exact offending value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub tuple: Vec<String>,
    pub value: String,
}

/// `{checked, failures}` summary of a finite scan.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one check; `failure` carries the offending value, if any.
    pub fn record<T: ToString>(&mut self, tuple: &[T], failure: Option<String>) {
        self.checked += 1;
        if let Some(value) = failure {
            self.failures.push(Failure {
                tuple: tuple.iter().map(|t| t.to_string()).collect(),
                value,
            });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}
