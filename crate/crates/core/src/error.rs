use thiserror::Error;

/// Errors raised by the library. Negative analysis results (a coalgebra that
/// is not co-Frobenius, a failed axiom) are reported as data, never as errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not a member of the distinguished basis")]
    NotInBasis(String),

    #[error("basis is not closed: {}", .0.join("; "))]
    InvalidBasis(Vec<String>),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid partial order: {0}")]
    InvalidPoset(String),

    #[error("invalid group data: {0}")]
    InvalidGroup(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size bound exceeded: {size} > {bound}")]
    SizeBound { size: usize, bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
