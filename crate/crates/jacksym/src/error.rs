use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at {0}")]
    Pole(String),
    #[error("invalid index {index} for partition {partition}")]
    InvalidIndex { partition: String, index: usize },
    #[error("{0} and {1} are not related by a single box")]
    NotSingleStep(String, String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
