use thiserror::Error;

use crate::gbase::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count must be at least 1, got {0}")]
    StrandCount(usize),

    #[error("malformed word token `{token}`: {reason}")]
    MalformedWord { token: String, reason: String },

    #[error("malformed g-base token `{token}`: {reason}")]
    MalformedGBase { token: String, reason: String },

    #[error("invalid g-base: {0}")]
    InvalidGBase(Violation),

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("free generator x{index} out of range for {strands} strands")]
    FreeGeneratorOutOfRange { index: usize, strands: usize },

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("oracle image exceeded {limit} syllables (reached {reached})")]
    ResourceExceeded { reached: usize, limit: usize },

    /// A state the algorithm should never reach on lists it produced itself.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
