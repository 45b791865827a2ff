use thiserror::Error;

use crate::ff::FfError;

/// Crate-wide error type for the fallible, data-dependent operations.
///
/// Contract violations (mixed moduli, dimension mismatches, calling an
/// operation outside its documented precondition) panic instead; see the
/// individual modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FfError),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Data(String),

    #[error("no term order realizes this staircase")]
    Unrealizable,

    #[error("m = {m} is out of range for p^n = {total}")]
    PointCountOutOfRange { m: u64, total: u64 },

    #[error("bound does not fit in 64 bits")]
    BoundOverflow,

    #[error("{0}")]
    Unsupported(String),

    #[error("survey requires {required} subsets at m = {m}, over the budget of {budget}; pass --sample K or raise --budget")]
    BudgetExceeded { m: usize, required: u64, budget: u64 },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn data(message: impl Into<String>) -> Self {
        Error::Data(message.into())
    }
}
