//! Verification reports shared by every lemma check.

use std::fmt;

use serde::{Deserialize, Serialize};

/// At most this many counterexamples are kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub reason: String,
    pub vector: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub lemma: String,
    pub instance: String,
    pub level: String,
    pub pass: bool,
    pub counterexamples: Vec<Counterexample>,
    pub wall_ms: Option<u64>,
}

impl Report {
    pub fn new(lemma: impl Into<String>, instance: impl Into<String>, level: impl Into<String>) -> Self {
        Report {
            lemma: lemma.into(),
            instance: instance.into(),
            level: level.into(),
            pass: true,
            counterexamples: Vec::new(),
            wall_ms: None,
        }
    }

    /// Records a failure; the report fails even once the counterexample list is full.
    pub fn fail(&mut self, reason: impl Into<String>, vector: Vec<i64>, witness: Option<Vec<i64>>) {
        self.pass = false;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample {
                reason: reason.into(),
                vector,
                witness,
            });
        }
    }

    pub fn check(&mut self, ok: bool, reason: &str, vector: &[i64], witness: Option<&[i64]>) {
        if !ok {
            self.fail(reason, vector.to_vec(), witness.map(<[i64]>::to_vec));
        }
    }

    /// Folds another report's outcome into this one.
    pub fn absorb(&mut self, other: Report) {
        for c in other.counterexamples {
            self.fail(c.reason, c.vector, c.witness);
        }
        self.pass &= other.pass;
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<18} {:<22} {:<24} {}",
            self.lemma,
            self.instance,
            self.level,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        if let Some(c) = self.counterexamples.first() {
            write!(f, "  {} at {:?}", c.reason, c.vector)?;
        }
        Ok(())
    }
}
