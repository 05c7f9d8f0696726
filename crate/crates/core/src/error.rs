use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map onto the CLI exit codes: usage 2, domain 3, capacity 4.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (bad order, table of wrong size, parse failure).
    #[error("usage error: {0}")]
    Usage(String),
    /// Input is well formed but outside the operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    /// A stated precondition on the arguments does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The request exceeds an enumeration guard.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Buchberger stopped after exhausting its pair budget.
    #[error("groebner computation incomplete after {pairs} S-pairs")]
    BudgetExceeded { pairs: usize },
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            Error::Domain(_) | Error::DivisionByZero | Error::Precondition(_) => 3,
            Error::Capacity(_) | Error::BudgetExceeded { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn capacity<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capacity(msg.into()))
}
