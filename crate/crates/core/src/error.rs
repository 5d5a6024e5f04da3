use thiserror::Error;

use crate::ordinal::Ordinal;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("interval [{lo}, {hi}] starts at a limit ordinal and is not open")]
    LimitIntervalStart { lo: Ordinal, hi: Ordinal },

    #[error("interval [{lo}, {hi}] is empty or reversed")]
    ReversedInterval { lo: Ordinal, hi: Ordinal },

    #[error("interval end {hi} lies beyond the top point {top}")]
    IntervalOutOfRange { hi: Ordinal, top: Ordinal },

    #[error("point {0} does not belong to the space")]
    PointOutOfRange(String),

    #[error("space has no {0} component")]
    MissingComponent(&'static str),

    #[error("operands live on different spaces ({0} vs {1})")]
    SpaceMismatch(String, String),

    #[error("pieces do not partition the space: {0}")]
    NotPartition(String),

    #[error("the unit ideal has no proper factorization")]
    UnitIdeal,

    #[error("function takes a negative value; not an integral ideal")]
    NegativeValue,

    #[error("invalid radical chain: {0}")]
    InvalidChain(String),

    #[error("value {0} is too large for this operation")]
    TooLarge(String),

    #[error("eventually periodic sequence needs a nonempty period")]
    EmptyPeriod,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// True for inputs that are well formed but outside the modelled cases.
    pub fn is_unsupported(&self) -> bool {
        matches!(self, Error::Unsupported(_))
    }
}
