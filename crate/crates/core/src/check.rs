//! Outcomes of exact identity checks, shared by the verification suites.

use std::fmt;

use crate::error::Result;
use crate::series::{Coeff, FourierSeries, QExp};

/// One named identity with the first disagreement, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: String,
    pub through: QExp,
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn pass(id: &str, through: QExp) -> Self {
        CheckOutcome { id: id.into(), through, witness: None }
    }

    pub fn fail(id: &str, through: QExp, witness: String) -> Self {
        CheckOutcome { id: id.into(), through, witness: Some(witness) }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "PASS {} (through q^{})", self.id, self.through),
            Some(w) => write!(f, "FAIL {} (through q^{}): {w}", self.id, self.through),
        }
    }
}

/// Compares two series through `through`.
pub fn compare<R: Coeff + fmt::Display>(
    id: &str,
    left: &FourierSeries<R>,
    right: &FourierSeries<R>,
    through: QExp,
) -> Result<CheckOutcome> {
    Ok(match left.agrees_through(right, through)? {
        None => CheckOutcome::pass(id, through),
        Some(m) => CheckOutcome::fail(id, through, format!("at q^{}: {} vs {}", m.exponent, m.left, m.right)),
    })
}
