use thiserror::Error;

pub type Result<T> = std::result::Result<T, BraidError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("a braid needs at least one strand")]
    NoStrands,

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("free generator {0} is out of range")]
    GeneratorOutOfRange(i32),

    #[error("not a closure component of this braid")]
    NotAComponent,

    #[error("braid word is not positive")]
    NotPositive,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not preserved by the braid")]
    PartitionNotPreserved,

    #[error("super summit set exceeded the budget of {0} elements")]
    BudgetExceeded(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl BraidError {
    pub fn precondition(msg: impl Into<String>) -> Self {
        BraidError::Precondition(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        BraidError::Internal(msg.into())
    }
}
