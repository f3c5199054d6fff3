//! Verification reports: pass, or the first violated law with a witness.

use std::fmt;

use serde::Serialize;

use crate::exactlin::tensor::split_index;
use crate::exactlin::{Matrix, Scalar};

/// The first failing identity: which law, at which basis indices, and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    /// Basis indices of the domain tensor factors where the two sides differ.
    pub witness: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub operation: String,
    /// Laws that were checked and held, in order.
    pub checked: Vec<String>,
    pub violation: Option<Violation>,
    pub notes: Vec<String>,
}

fn render(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

impl Report {
    pub fn new(operation: impl Into<String>) -> Self {
        Report {
            operation: operation.into(),
            checked: Vec::new(),
            violation: None,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn fail(&mut self, law: impl Into<String>, witness: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]) {
        if self.violation.is_none() {
            self.violation = Some(Violation {
                law: law.into(),
                witness,
                lhs: render(lhs),
                rhs: render(rhs),
            });
        }
    }

    /// Records a boolean law; `detail` is shown as the left-hand side on failure.
    pub fn check(&mut self, law: impl Into<String>, ok: bool, detail: &str) -> bool {
        if !self.passed() {
            return false;
        }
        let law = law.into();
        if ok {
            self.checked.push(law);
        } else {
            self.violation = Some(Violation {
                law,
                witness: Vec::new(),
                lhs: vec![detail.to_string()],
                rhs: Vec::new(),
            });
        }
        ok
    }

    /// Compares two linear maps column by column. The witness is the first
    /// differing domain basis element, split along `domain` tensor factors.
    pub fn check_maps(&mut self, law: impl Into<String>, lhs: &Matrix, rhs: &Matrix, domain: &[usize]) -> bool {
        if !self.passed() {
            return false;
        }
        let law = law.into();
        if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
            self.violation = Some(Violation {
                law,
                witness: Vec::new(),
                lhs: vec![format!("{}x{} map", lhs.rows(), lhs.cols())],
                rhs: vec![format!("{}x{} map", rhs.rows(), rhs.cols())],
            });
            return false;
        }
        debug_assert_eq!(domain.iter().product::<usize>(), lhs.cols());
        for j in 0..lhs.cols() {
            if (0..lhs.rows()).any(|i| lhs.get(i, j) != rhs.get(i, j)) {
                self.fail(law, split_index(j, domain), &lhs.column(j), &rhs.column(j));
                return false;
            }
        }
        self.checked.push(law);
        true
    }

    pub fn check_vectors(&mut self, law: impl Into<String>, witness: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]) -> bool {
        if !self.passed() {
            return false;
        }
        let law = law.into();
        if lhs == rhs {
            if !self.checked.contains(&law) {
                self.checked.push(law);
            }
            true
        } else {
            self.fail(law, witness, lhs, rhs);
            false
        }
    }

    /// Folds a sub-report in, prefixing its law names with `scope`.
    pub fn absorb(&mut self, scope: &str, other: Report) -> bool {
        if !self.passed() {
            return false;
        }
        self.checked.extend(other.checked.into_iter().map(|l| format!("{scope}: {l}")));
        self.notes.extend(other.notes);
        if let Some(mut v) = other.violation {
            v.law = format!("{scope}: {}", v.law);
            self.violation = Some(v);
            return false;
        }
        true
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{}: {verdict}", self.operation)?;
        for law in &self.checked {
            writeln!(f, "  ok   {law}")?;
        }
        if let Some(v) = &self.violation {
            writeln!(f, "  FAIL {}", v.law)?;
            writeln!(f, "       witness basis indices {:?}", v.witness)?;
            writeln!(f, "       lhs [{}]", v.lhs.join(", "))?;
            writeln!(f, "       rhs [{}]", v.rhs.join(", "))?;
        }
        for note in &self.notes {
            writeln!(f, "  note {note}")?;
        }
        Ok(())
    }
}
