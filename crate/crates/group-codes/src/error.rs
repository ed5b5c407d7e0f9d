//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("incompatible operands: {0}")]
    IncompatibleOperands(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    /// An enumeration would exceed the caller's candidate budget.
    #[error("budget exceeded: required {required}, budget {budget}")]
    BudgetExceeded { required: u64, budget: u64 },

    /// Two routes that must agree disagreed. Always indicates a bug.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("value has valuation {valuation}, below layer {layer}")]
    NotInLayer { layer: u32, valuation: u32 },

    /// The lifting iteration hit its cap without producing an idempotent.
    /// Mathematically impossible for a valid input; indicates a bug.
    #[error("idempotent lifting failed to converge")]
    LiftingFailure,

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
