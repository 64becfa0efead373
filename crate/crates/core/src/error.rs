use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("ring must have between 1 and {max} variables, got {got}")]
    BadVariableCount { got: usize, max: usize },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("module vectors have mixed ranks ({0} and {1})")]
    MixedRanks(usize, usize),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("the zero polynomial does not define a hypersurface")]
    ZeroPolynomial,
    #[error("hypersurface is not reduced")]
    NotReduced,
    #[error("hypersurface is a cone (partial derivatives are linearly dependent)")]
    Cone,
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("declared syzygy `{name}` rejected: {reason}")]
    BadDeclaredSyzygy { name: String, reason: String },
    #[error("{0}")]
    Invalid(String),
}
