use kzr_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KzError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("invalid partition {parts:?} for degree {n}")]
    InvalidPartition { parts: Vec<usize>, n: usize },
    #[error("invalid transposition ({0},{1}) for degree {2}")]
    InvalidTransposition(usize, usize, usize),
    #[error("entry √({0}) lies outside Q(√2,√3)")]
    FieldExtension(String),
    #[error("missing matrices for pairs {0:?}")]
    MissingMatrix(Vec<(usize, usize)>),
    #[error("coordinates z{0} and z{1} coincide")]
    CoincidentPoints(usize, usize),
    #[error("point violates {0}")]
    InvalidPoint(String),
    #[error("representation must have degree {expected}, got {actual}")]
    WrongDegree { expected: usize, actual: usize },
    #[error("ρ = 0 makes the solution formulas divide by zero")]
    ZeroRho,
    #[error("exact mode needs an integer ρ, got {0}")]
    NonIntegerRho(String),
    #[error("no rational solution found within degree bound {0}")]
    NoRationalSolution(usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("singular frame: {0}")]
    SingularFrame(String),
    #[error("step size underflow near y = {0}")]
    StepUnderflow(f64),
    #[error("{0}")]
    Json(String),
}

pub type Result<T, E = KzError> = std::result::Result<T, E>;
