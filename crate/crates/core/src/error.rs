use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix has more rows ({rows}) than columns ({cols})")]
    TooManyRows { rows: usize, cols: usize },
    #[error("index sum {sum} exceeds the degree {degree} of the first polynomial")]
    IndexTooLarge { sum: usize, degree: usize },
    #[error("first polynomial must have positive degree")]
    ConstantBase,
    #[error("index needs polynomial {0} which was not supplied")]
    MissingPolynomial(usize),
    #[error("{0}")]
    ZeroDivisor(&'static str),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("index {0:?} does not admit the pseudo-remainder shortcut")]
    BadPremIndex(Vec<usize>),
    #[error("specialization is degenerate: {0}")]
    Degenerate(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} condition(s) matched; exactly one expected")]
    MatchCount(usize),
    #[error("unknown registry key {0}")]
    UnknownKey(String),
    #[error("generation exceeded its time budget")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, Error>;
