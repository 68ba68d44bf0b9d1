use thiserror::Error;

/// Errors raised by graph construction, parsing and precondition checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("graph order {order} exceeds cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("{path}: {reason}")]
    Io { path: String, reason: String },

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// A search ran past its node budget before reaching a conclusion.
///
/// This is never interpreted as "no minor" or "no coloring".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {limit} nodes exhausted")]
pub struct BudgetExhausted {
    pub limit: u64,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
