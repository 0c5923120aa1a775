use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter or input violates a documented precondition.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A work or size guard would be exceeded.
    #[error("guard exceeded: {what} needs {needed}, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("attempted to invert zero")]
    ZeroInverse,

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("could not certify a complete factorization of {0} (unresolved cofactor)")]
    FactorizationFailed(u128),

    #[error("divisor is not effective")]
    NotEffective,

    #[error("set is empty")]
    EmptySet,

    #[error("zero lies in the set; no multiplicative subgroup contains it")]
    ZeroInSet,

    #[error("every point of the subspace is a zero or a pole of the rational function")]
    DegenerateValueSet,

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }
}
