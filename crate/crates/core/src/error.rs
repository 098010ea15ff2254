use thiserror::Error;

/// Errors raised by the library and surfaced by the CLI as input errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid fraction {0:?}: exact fractions required")]
    Fraction(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ambient dimension must be at least 1")]
    EmptyAmbient,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("a finite space needs at least one point")]
    EmptySpace,
    #[error("duplicate point label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown point label {0:?}")]
    UnknownLabel(String),
    #[error("pair projection needs two distinct points, got {0:?} twice")]
    SamePoint(String),
    #[error("functions live on different spaces")]
    SpaceMismatch,
    #[error("function does not vanish at the point at infinity (value {0})")]
    NonVanishing(String),
    #[error("infinity label {0:?} collides with a point of the base space")]
    InfinityCollision(String),
    #[error("witness requested for a subspace that is already a {0}")]
    AlreadyClosed(&'static str),
    #[error("relation coefficient {0} outside [0, 1]")]
    LambdaOutOfRange(String),
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
