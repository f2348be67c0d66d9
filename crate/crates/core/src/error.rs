use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("crossing number {c} is below the minimum of {min}")]
    CrossingNumberTooSmall { c: usize, min: usize },

    #[error("crossing number {c} exceeds the configured cap of {cap}")]
    CrossingNumberAboveCap { c: usize, cap: usize },

    #[error("invalid range: min {min} > max {max}")]
    InvalidRange { min: usize, max: usize },

    #[error("negative index {0}")]
    NegativeIndex(i64),

    /// A word or run sequence that is not a member of T(c).
    #[error("invalid word: {0}")]
    InvalidWord(#[from] WordError),

    #[error("{op} needs {expected} crossing number, got c = {c}")]
    WrongParity {
        op: &'static str,
        expected: &'static str,
        c: usize,
    },

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("diagram traces to {0} components, expected a knot")]
    NotAKnot(usize),

    #[error("inconsistent orientation data: {0}")]
    InconsistentOrientation(String),

    /// An identity that must hold by construction failed; indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

/// The specific membership condition a word breaks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty word")]
    Empty,

    #[error("unexpected character {0:?}; only '+' and '-' are allowed")]
    BadSymbol(char),

    #[error("word must start with '+'")]
    StartsWithMinus,

    #[error("run {index} has length {len} > 2")]
    RunTooLong { index: usize, len: usize },

    #[error("run {index} has length {len}; run lengths must be 1 or 2")]
    BadRunLength { index: usize, len: u32 },

    #[error("crossing number c = {0} < 3")]
    TooFewRuns(usize),

    #[error("first run must be a single, found length {0}")]
    FirstRunDouble(u8),

    #[error("last run must be a single, found length {0}")]
    LastRunDouble(u8),

    #[error("length l = {0} is not 1 mod 3 (l mod 3 = {r})", r = .0 % 3)]
    LengthNotOneModThree(usize),
}
