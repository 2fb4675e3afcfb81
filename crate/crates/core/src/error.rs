use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("Gram matrix of the even part is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("form on the odd part is not alternating at ({0}, {1})")]
    NotAlternating(usize, usize),

    #[error("a non-degenerate alternating form needs an even dimension, got {0}")]
    OddSymplecticDimension(usize),

    #[error("form is degenerate: {0}")]
    Degenerate(&'static str),

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("expected an element of order {expected}, found order {found}")]
    WrongOrder { expected: usize, found: usize },

    #[error("insertion depth {l} out of range for order {k}")]
    DepthOutOfRange { l: usize, k: usize },

    #[error("space has no star pairing")]
    NoStarPairing,

    #[error("star pairing is invalid: {0}")]
    BadStarPairing(String),

    #[error("endomorphism is not in {0}")]
    NotInAlgebra(&'static str),

    #[error("space was not built on a Witt/symplectic basis")]
    NotWitt,

    #[error("expected an odd-dimensional even part")]
    EvenDimension,

    #[error("expected an even-dimensional even part")]
    OddDimension,

    #[error("basis vector {0} is not a simultaneous eigenvector of the Cartan generators")]
    NotEigenvector(String),

    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { col, msg: msg.into() }
    }
}
