use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational literal {0:?}")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    /// A map was asked to descend to a quotient whose relations it does not preserve.
    #[error("map does not descend to the quotient: {0}")]
    WellDefinedness(String),

    /// A map was asked to restrict to a subspace it does not preserve.
    #[error("map does not restrict to the subspace: {0}")]
    Restriction(String),

    #[error("H-action leaves the space of A-linear maps: {0}")]
    Closure(String),

    #[error("natural transformation check failed: {0}")]
    Naturality(String),

    #[error("cyclic operator does not satisfy tau^(n+1) = id in degree {degree}")]
    Cyclicity { degree: usize },

    #[error("differential does not square to zero in degree {degree}")]
    B2 { degree: usize },

    #[error("map does not commute with the structure maps: {0}")]
    Commutation(String),

    /// Input data failed a validator; the payload is the rendered report.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Malformed instance file; `path` is the offending key path.
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
}

pub type Result<T> = std::result::Result<T, Error>;
