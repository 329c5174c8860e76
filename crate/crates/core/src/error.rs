use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a supported prime (need a prime p with 2 <= p <= {max})", max = crate::field::MAX_PRIME)]
    InvalidPrime(u64),

    #[error("operands live over different fields ({0} vs {1})")]
    MixedFields(String, String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{what} needs {needed} steps but the budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        budget: u64,
    },

    #[error("unsupported field for {operation}: {field}")]
    UnsupportedField { operation: &'static str, field: String },

    #[error("right Leibniz identity fails on basis triple ({0}, {1}, {2})")]
    NotLeibniz(usize, usize, usize),

    #[error("subspace is not an ideal of the algebra")]
    NotAnIdeal,

    #[error("subspace is not a node of the subalgebra lattice")]
    NotANode,

    #[error("matrix is singular")]
    Singular,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
