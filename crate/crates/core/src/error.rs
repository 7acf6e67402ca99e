use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("code has no nonzero codeword")]
    NoNonzeroCodeword,

    #[error("edge {0} is empty")]
    EmptyEdge(usize),

    #[error("code length must be positive")]
    EmptyLength,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration needs {required} evaluations, cap is {cap}")]
    ResourceCap { required: u128, cap: u64 },

    #[error("polynomial division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
