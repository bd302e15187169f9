use thiserror::Error;

/// Errors raised by the exact engine.
///
/// Variants in the second group indicate an internal-consistency failure
/// (a bug in an operator or a violated mathematical invariant) rather than
/// bad user input; the CLI maps them to a distinct exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("pole of order {order} at v = {at}")]
    Pole { order: usize, at: String },
    #[error("unsupported root system {label}{rank}")]
    UnsupportedRootSystem { label: char, rank: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i32>),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("singular Gram matrix for lambda = {0:?}")]
    SingularGram(Vec<i32>),
    #[error("input is not W-invariant")]
    NotInvariant,
    #[error("proportionality check failed: {0}")]
    NotProportional(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// True for failures that signal a broken invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NotDivisible(_)
                | Error::SingularGram(_)
                | Error::NotProportional(_)
                | Error::Consistency(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
