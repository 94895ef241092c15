use thiserror::Error;

/// Errors raised by the algebraic operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("pairing undefined for ({left}, {right})")]
    UndefinedPairing { left: String, right: String },

    #[error("empty tree has no root")]
    EmptyTree,

    #[error("vertex without a label in {0}")]
    UnlabeledVertex(String),

    #[error("{0} requires a weight bound")]
    MissingBound(&'static str),

    #[error("functional has value {found} on the empty forest, expected {expected}")]
    UnitValue { expected: String, found: String },

    #[error("word {0} is not a Lyndon word")]
    NotLyndon(String),

    #[error("{0} is not defined for the ZERO pairing")]
    DegeneratePairing(&'static str),

    #[error("cocycle law fails on {0}")]
    CocycleViolation(String),

    #[error("map {map} cannot be applied to an element of {found}")]
    DomainMismatch { map: String, found: String },

    #[error("unknown map {0}")]
    UnknownMap(String),

    #[error("{0} is not a symmetric function")]
    NotSymmetric(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
