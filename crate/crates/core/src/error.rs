use crate::exactalg::Rational;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("level {level} is a critical value of the momentum map")]
    CriticalLevel { level: Rational },

    #[error("fixed point with weights {weights:?} has weights of one sign only")]
    OneSidedWeights { weights: Vec<i64> },

    #[error("fixed point with weights {weights:?} is not an isolated point")]
    NotIsolated { weights: Vec<i64> },

    #[error("weights {weights:?} do not share one absolute value")]
    UnequalWeights { weights: Vec<i64> },

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    /// Two computations that must agree did not. Always a bug or a broken
    /// mathematical assumption, never bad input.
    #[error("route inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Internal inconsistencies as opposed to rejected input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistent(_))
    }
}
