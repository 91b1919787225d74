//! Itemised pass/fail reports shared by all checkers.

use serde::Serialize;

use crate::cyclofield::CycNum;
use crate::gvect::{Mor, State};

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ReportItem {
    pub id: String,
    pub pass: bool,
    /// Present iff the item failed: the first deviating entry, exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Default)]
pub struct Report {
    pub title: String,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), items: Vec::new() }
    }

    pub fn push(&mut self, id: impl Into<String>, witness: Option<String>) {
        self.items.push(ReportItem { id: id.into(), pass: witness.is_none(), witness });
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.push(id, None);
    }

    pub fn fail(&mut self, id: impl Into<String>, witness: impl Into<String>) {
        self.push(id, Some(witness.into()));
    }

    /// Record a boolean check with a witness produced only on failure.
    pub fn check(&mut self, id: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        self.push(id, if ok { None } else { Some(witness()) });
    }

    pub fn check_mor(&mut self, id: impl Into<String>, lhs: &Mor, rhs: &Mor) {
        self.push(id, mor_witness(lhs, rhs));
    }

    pub fn check_state(&mut self, id: impl Into<String>, lhs: &State, rhs: &State) {
        self.push(id, state_witness(lhs, rhs));
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn passed(&self) -> usize {
        self.items.iter().filter(|i| i.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.items.len() - self.passed()
    }

    pub fn item(&self, id: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn item_passes(&self, id: &str) -> bool {
        self.item(id).is_some_and(|i| i.pass)
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.items.iter().filter(|i| !i.pass).map(|i| i.id.as_str()).collect()
    }
}

fn describe(lhs: &CycNum, rhs: &CycNum) -> String {
    format!("lhs = {lhs}, rhs = {rhs}, lhs − rhs = {}", lhs.sub(rhs))
}

pub fn mor_witness(lhs: &Mor, rhs: &Mor) -> Option<String> {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Some(format!("shape {}×{} vs {}×{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()));
    }
    lhs.first_difference(rhs).map(|(i, j, a, b)| format!("entry ({i},{j}): {}", describe(&a, &b)))
}

pub fn state_witness(lhs: &State, rhs: &State) -> Option<String> {
    lhs.first_difference(rhs).map(|(k, a, b)| {
        if k == usize::MAX {
            "leg shapes differ".to_string()
        } else {
            format!("flat entry {k}: {}", describe(&a, &b))
        }
    })
}
