use alloc::string::String;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("incompatible operands: {0}")]
    Incompatible(String),
    #[error("budget exceeded: {size} candidate families, budget is {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("closure did not stabilise within {0} iterations")]
    IterationCap(usize),
    #[error("name enumeration needs 2^{count} names, limit is 2^{limit}")]
    NameLimit { count: usize, limit: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
