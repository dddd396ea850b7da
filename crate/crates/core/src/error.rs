use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("points {0:?} violate general position")]
    DegeneratePosition(Vec<usize>),
    #[error("need at least {needed} points in dimension {dim}, got {got}")]
    TooFewPoints { dim: usize, needed: usize, got: usize },
    #[error("unsupported dimension {0}; expected 2 or 3")]
    BadDimension(usize),
    #[error("operation requires dimension {expected}, point set has dimension {actual}")]
    WrongDimension { expected: usize, actual: usize },
    #[error("point index {0} out of range")]
    InvalidIndex(usize),
    #[error("point {0} is an endpoint of the edge")]
    EndpointConflict(usize),
    #[error("brute-force oracle limited to {cap} points, got {n}")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("unknown identity or weight `{0}`")]
    UnknownIdentity(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("mixed moment identity is only established for r <= 2, got r = {0}")]
    BadR(usize),
    #[error("expected {expected} evaluation points, got {got}")]
    BadVectorLength { expected: usize, got: usize },
    #[error("evaluation point {0} is repeated")]
    RepeatedX(String),
    #[error("evaluation points must be nonzero")]
    ZeroX,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("base row does not cover k = {0}")]
    RangeExceeded(i64),
    #[error("bad point count {n}: {reason}")]
    BadN { n: usize, reason: String },
    #[error("random generator gave up after {0} rejected samples")]
    RetryBudgetExceeded(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
