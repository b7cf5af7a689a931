//! Pass/fail records shared by the verification sweeps.

use std::fmt;

/// Outcome of one verification case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass(id: impl Into<String>) -> Self {
        Outcome { id: id.into(), pass: true, witness: None }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Outcome { id: id.into(), pass: false, witness: Some(witness.into()) }
    }

    /// Passes iff `witness` is `None`.
    pub fn from_witness(id: impl Into<String>, witness: Option<String>) -> Self {
        Outcome { id: id.into(), pass: witness.is_none(), witness }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.id, if self.pass { "PASS" } else { "FAIL" })?;
        if let Some(w) = &self.witness {
            write!(f, " {}", w)?;
        }
        Ok(())
    }
}

/// Sorts by case id so that reports are stable under parallel evaluation.
pub fn sorted(mut v: Vec<Outcome>) -> Vec<Outcome> {
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}
