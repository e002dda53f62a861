use thiserror::Error;

use crate::solver::SolveStats;

/// Errors raised by library operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input (bad endpoints, self-loops, bad indices).
    #[error("invalid input: {0}")]
    Input(String),

    /// The instance is larger than the configured budget for an exhaustive method.
    #[error("{what} refused: {size} exceeds budget {budget}")]
    Budget {
        what: &'static str,
        size: usize,
        budget: usize,
    },

    /// The operation is undefined for this input (e.g. complete graph, forest).
    #[error("domain error: {0}")]
    Domain(String),

    /// The solver memo table exceeded its configured cap.
    #[error("memo limit of {limit} entries exceeded after {} subproblems", stats.subproblems)]
    MemoLimit { limit: usize, stats: SolveStats },

    /// A `.gr` or tree document could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_budget(what: &'static str, size: usize, budget: usize) -> Result<()> {
    if size > budget {
        Err(Error::Budget { what, size, budget })
    } else {
        Ok(())
    }
}
