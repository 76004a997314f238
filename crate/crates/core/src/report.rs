//! Verification reports produced by the randomized harnesses.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::ring::Matrix;
use crate::value::ExtendedValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// No applicable instance was generated.
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// Inputs and both sides of a violated law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub ring: String,
    /// Named matrices in the text grammar.
    pub matrices: Vec<(String, String)>,
    pub values: Vec<(String, ExtendedValue)>,
    /// The relation that failed, e.g. `lhs <= rhs`.
    pub relation: String,
}

impl Witness {
    pub fn new(relation: impl Into<String>) -> Self {
        Witness {
            ring: String::new(),
            matrices: Vec::new(),
            values: Vec::new(),
            relation: relation.into(),
        }
    }

    pub fn matrix(mut self, name: &str, m: &Matrix) -> Self {
        if self.ring.is_empty() {
            self.ring = m.ring().to_string();
        }
        self.matrices.push((name.into(), m.to_text()));
        self
    }

    pub fn value(mut self, name: &str, v: &ExtendedValue) -> Self {
        self.values.push((name.into(), v.clone()));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseReport {
    pub clause: String,
    pub samples: usize,
    pub failures: usize,
    pub status: Status,
    /// The first counterexample found.
    pub witness: Option<Witness>,
}

impl ClauseReport {
    pub fn new(clause: impl Into<String>) -> Self {
        ClauseReport {
            clause: clause.into(),
            samples: 0,
            failures: 0,
            status: Status::Skipped,
            witness: None,
        }
    }

    /// Records one instance. The witness is built only for the first failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.samples += 1;
        if ok {
            if self.status == Status::Skipped {
                self.status = Status::Pass;
            }
        } else {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
            self.status = Status::Fail;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub label: String,
    pub seed: u64,
    pub clauses: Vec<ClauseReport>,
    /// Extra exact values worth showing next to the clauses.
    pub notes: Vec<(String, String)>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, label: impl Into<String>, seed: u64) -> Self {
        VerificationReport {
            subject: subject.into(),
            label: label.into(),
            seed,
            clauses: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// True when no clause failed.
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status != Status::Fail)
    }

    pub fn clause(&self, name: &str) -> Option<&ClauseReport> {
        self.clauses.iter().find(|c| c.clause == name)
    }

    pub fn clause_mut(&mut self, name: &str) -> &mut ClauseReport {
        match self.clauses.iter().position(|c| c.clause == name) {
            Some(i) => &mut self.clauses[i],
            None => {
                self.clauses.push(ClauseReport::new(name));
                self.clauses.last_mut().unwrap()
            }
        }
    }

    pub fn total_samples(&self) -> usize {
        self.clauses.iter().map(|c| c.samples).sum()
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for c in other.clauses {
            let name = c.clause.clone();
            let mine = self.clause_mut(&name);
            mine.samples += c.samples;
            mine.failures += c.failures;
            if mine.witness.is_none() {
                mine.witness = c.witness;
            }
            mine.status = match (mine.status, c.status) {
                (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
                (Status::Pass, _) | (_, Status::Pass) => Status::Pass,
                _ => Status::Skipped,
            };
        }
        self.notes.extend(other.notes);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_kept() {
        let mut r = VerificationReport::new("t", "x", 1);
        r.clause_mut("a").record(true, || unreachable!());
        r.clause_mut("a").record(false, || Witness::new("first"));
        r.clause_mut("a").record(false, || Witness::new("second"));
        let c = r.clause("a").unwrap();
        assert_eq!((c.samples, c.failures, c.status), (3, 2, Status::Fail));
        assert_eq!(c.witness.as_ref().unwrap().relation, "first");
        assert!(!r.passed());
        assert_eq!(r.clause_mut("b").status, Status::Skipped);
    }
}
