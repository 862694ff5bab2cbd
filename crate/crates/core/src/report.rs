//! Axiom-check reports.
//!
//! A [`Report`] is a list of named axioms, each with the number of cases
//! checked and up to [`MAX_WITNESSES`] concrete violations. Witnesses name
//! the basis tuple and render both sides in coordinates.

use std::fmt;

use serde::Serialize;

use crate::linalg::SparseVec;
use crate::scalar::Scalar;

pub const MAX_WITNESSES: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub basis: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub witnesses: Vec<Violation>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn compare(&mut self, basis: &[usize], lhs: &SparseVec, rhs: &SparseVec) -> bool {
        self.cases += 1;
        if lhs == rhs {
            return true;
        }
        self.record(basis, render(lhs), render(rhs));
        false
    }

    pub fn compare_scalar(&mut self, basis: &[usize], lhs: &Scalar, rhs: &Scalar) -> bool {
        self.cases += 1;
        if lhs == rhs {
            return true;
        }
        self.record(basis, lhs.to_string(), rhs.to_string());
        false
    }

    /// Records a boolean case; `detail` is only rendered on failure.
    pub fn expect(&mut self, basis: &[usize], ok: bool, detail: impl FnOnce() -> (String, String)) -> bool {
        self.cases += 1;
        if !ok {
            let (l, r) = detail();
            self.record(basis, l, r);
        }
        ok
    }

    fn record(&mut self, basis: &[usize], lhs: String, rhs: String) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Violation {
                basis: basis.to_vec(),
                lhs,
                rhs,
            });
        }
    }
}

/// Sparse coordinates as `{i: a, ...}`.
pub fn render(v: &SparseVec) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = v.iter().map(|(i, a)| format!("{i}: {a}")).collect();
    format!("{{{}}}", parts.join(", "))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub axioms: Vec<AxiomResult>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            axioms: Vec::new(),
        }
    }

    pub fn axiom(&mut self, name: impl Into<String>) -> &mut AxiomResult {
        self.axioms.push(AxiomResult {
            name: name.into(),
            cases: 0,
            failures: 0,
            witnesses: Vec::new(),
        });
        self.axioms.last_mut().unwrap()
    }

    /// Records a single pass/fail fact with a free-form message.
    pub fn note(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let a = self.axiom(name);
        let d = detail.into();
        a.expect(&[], ok, || (d, String::new()));
    }

    pub fn passed(&self) -> bool {
        self.axioms.iter().all(AxiomResult::passed)
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.axioms
            .iter()
            .filter(|a| !a.passed())
            .map(|a| a.name.as_str())
            .collect()
    }

    pub fn has_failure(&self, name: &str) -> bool {
        self.axioms.iter().any(|a| a.name == name && !a.passed())
    }

    /// Appends another report's axioms, prefixing their names.
    pub fn absorb(&mut self, other: Report) {
        let prefix = other.subject;
        for mut a in other.axioms {
            if !prefix.is_empty() {
                a.name = format!("{prefix}: {}", a.name);
            }
            self.axioms.push(a);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for a in &self.axioms {
            let status = if a.passed() { "ok  " } else { "FAIL" };
            writeln!(f, "  [{status}] {} ({} cases)", a.name, a.cases)?;
            for w in &a.witnesses {
                writeln!(f, "         at {:?}: lhs = {}, rhs = {}", w.basis, w.lhs, w.rhs)?;
            }
            if a.failures > a.witnesses.len() {
                writeln!(f, "         ... {} more", a.failures - a.witnesses.len())?;
            }
        }
        Ok(())
    }
}
