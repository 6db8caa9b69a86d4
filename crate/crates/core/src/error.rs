use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("invalid variable table: {0}")]
    InvalidVarTable(String),
    #[error("operands live over different variable tables")]
    VarTableMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("no power-series square root: {0}")]
    NoSeriesRoot(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("polynomial is not a monic quadratic in the chosen variable: {0}")]
    NotQuadratic(String),
    #[error("a truncation order is required: {0}")]
    OrderRequired(String),
}
