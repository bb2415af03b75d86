use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A fixed-width scalar could not hold an intermediate value.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{dividend} is not divisible by {divisor}")]
    NonDivisible { dividend: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} = {requested} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    #[error("eigen-equation fails at vertex {vertex} (d={d}, j={j}, subset={subset:#b}): got {got}, expected {expected}")]
    EigenMismatch {
        d: u32,
        j: u32,
        subset: u32,
        vertex: u32,
        got: String,
        expected: String,
    },

    #[error("claim failed: {0}")]
    ClaimFailed(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True when the error means a mathematical contract was violated, as
    /// opposed to a bad request (out-of-domain input or an exceeded cap).
    pub fn is_contract_failure(&self) -> bool {
        !matches!(
            self,
            Error::Domain(_) | Error::CapExceeded { .. } | Error::Overflow(_)
        )
    }
}
