use thiserror::Error;

/// Failures raised by series arithmetic and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient ring mismatch: {0}")]
    RingMismatch(String),

    #[error("cap underflow: need q-order {needed}, only known through {available}")]
    CapUnderflow { needed: String, available: String },

    #[error("leading coefficient is not a unit: {0}")]
    NonUnit(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("exponent off lattice: {0}")]
    Lattice(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("not in the integral span: {0}")]
    NotInSpan(String),

    #[error("underdetermined: {0}")]
    Underdetermined(String),

    #[error("missing data: {0}")]
    Missing(String),

    #[error("non-integral result: {0}")]
    NonIntegral(String),

    #[error("identity check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
