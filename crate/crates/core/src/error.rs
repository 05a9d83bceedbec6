use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// A caller passed inconsistent or out-of-range arguments.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A comparison contradicts what the partial order already knows.
    #[error("comparison {lo} < {hi} contradicts the known order")]
    Consistency { lo: usize, hi: usize },
    /// An exact computation would exceed its configured budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// A stepwise protocol was driven out of order.
    #[error("invalid state: {0}")]
    State(String),
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
