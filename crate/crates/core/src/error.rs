use thiserror::Error;

/// Errors raised by ring arithmetic, S-ideal predicates and decompositions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("parse error at position {position}: expected {expected}, found {found}")]
    Parse {
        position: usize,
        expected: String,
        found: String,
    },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("invalid multiplicative set: {0}")]
    InvalidMultiplicativeSet(String),

    #[error("unsupported enumeration: {0}")]
    UnsupportedEnumeration(String),

    #[error("cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: String,
        cap: usize,
    },

    #[error("ideal meets S (witness {witness})")]
    NotDisjoint { witness: String },

    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),
}

impl Error {
    pub(crate) fn mismatch(left: impl ToString, right: impl ToString) -> Self {
        Error::RingMismatch {
            left: left.to_string(),
            right: right.to_string(),
        }
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
