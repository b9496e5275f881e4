use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {op} on {left:?} and {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("rational function has a pole at {0}")]
    Pole(String),
    #[error("gcd does not divide the right-hand side")]
    NotDivisible,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
