use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Why a word failed the Dyck test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DyckViolation {
    /// 1-based index of the first step that lands below the axis.
    BelowAxis { step: usize },
    /// The word does not return to the axis.
    Unbalanced { final_height: i64 },
}

impl fmt::Display for DyckViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DyckViolation::BelowAxis { step } => write!(f, "vertex below axis at step {step}"),
            DyckViolation::Unbalanced { final_height } => write!(f, "final height {final_height}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid character {found:?} at position {position}")]
    InvalidCharacter { position: usize, found: char },
    #[error("step index {index} out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("not a bilateral Dyck word: final height {final_height}")]
    NotBilateral { final_height: i64 },
    #[error("not a Dyck word: {0}")]
    NotADyckWord(DyckViolation),
    #[error("the empty word has no decomposition")]
    EmptyWord,
    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
