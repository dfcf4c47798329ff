use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("could not parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("not a dominant weight: entry {index} ({left}) is smaller than entry {} ({right})", index + 1)]
    NotDominant { index: usize, left: u32, right: u32 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("{0} is not in the branching semigroup")]
    NotInBranchingSemigroup(String),

    #[error("{shape} is not of order type {order_type}")]
    NotOfOrderType { shape: String, order_type: String },

    #[error("rearrangement must have last entry 0, found {0}")]
    NotEndingInZero(u32),

    #[error("peeling requires p_max > 1, found {0}")]
    PeelLevel(u32),

    #[error("{gamma} does not lie between the two sides of {shape}")]
    NotIntermediate { gamma: String, shape: String },

    #[error("sum mismatch: p' + p'' != q' + q''")]
    SumMismatch,

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;
