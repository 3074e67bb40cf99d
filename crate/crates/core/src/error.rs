use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u32),
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u32),
    #[error("digit {digit} is out of range for base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },
    #[error("pattern must be nonempty and contain a nonzero digit")]
    ZeroPattern,
    #[error("word has a leading zero where a proper word is required")]
    ImproperWord,
    #[error("context mismatch: (b={0}, m={1}) vs (b={2}, m={3})")]
    ContextMismatch(u32, u32, u32, u32),
    #[error("word length {len} is not divisible by {required}")]
    LengthNotDivisible { len: usize, required: usize },
    #[error("weighted set is empty after properization; the sequence is constantly 1")]
    Degenerate,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("modulus mismatch between cyclotomic elements ({0} vs {1})")]
    FieldMismatch(u32, u32),
    #[error("string word form requires base <= 10, got base {0}")]
    StringWordBase(u32),
    #[error("malformed spec: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
