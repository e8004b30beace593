use alloc::string::String;

/// Errors raised by the exact constructions.
///
/// Non-existence of a root or of a triple is not an error; those operations
/// return `Option`. Errors are reserved for violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("singular curve: discriminant vanishes")]
    SingularCurve,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("map has a pole at this point")]
    Pole,
    #[error("parameter {0} is excluded")]
    ExcludedParameter(String),
    #[error("degenerate result: {0}")]
    Degenerate(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
