use thiserror::Error;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable index x{index} out of range for ambient n={ambient}")]
    IndexOutOfRange { index: usize, ambient: usize },
    #[error("exponent {exponent} outside 1..={max}")]
    ExponentOutOfRange { exponent: u32, max: u8 },
    #[error("ambient size {0} outside 1..=20")]
    AmbientOutOfRange(usize),
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("relabel map is not injective (target x{0} used twice)")]
    NotInjective(usize),
    #[error("relabel map does not cover support variable x{0}")]
    UnmappedIndex(usize),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("family bounds violated: {0}")]
    FamilyBounds(String),
    #[error("characteristic poset exceeds cap of {cap} elements")]
    PosetCap { cap: usize },
    #[error("search time limit of {millis} ms exceeded")]
    TimeLimit { millis: u64 },
    #[error("ideal must be squarefree")]
    NotSquarefree,
    #[error("ideal must be nonzero and proper")]
    DegenerateIdeal,
    #[error("ambient {0} too large for the homological oracle (max 14)")]
    OracleAmbient(usize),
    #[error("certificate line {line}: {msg}")]
    Certificate { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
