use thiserror::Error;

use crate::ideals::IdealKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("table of order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("left invertive law fails at ({a}, {b}, {c})")]
    NotLeftInvertive { a: usize, b: usize, c: usize },

    #[error("subset over a universe of order {found} used with a table of order {expected}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("element {element} is outside the universe of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("ideals and bi-ideals are nonempty; the empty set was given")]
    EmptySubset,

    #[error("order {order} is above the enumeration cap of {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("subset is not a {kind}")]
    NotOfKind { kind: IdealKind },

    #[error("power exponent must be at least 1")]
    ZeroExponent,

    #[error("maximum exponent must be at least 2")]
    ExponentRange,

    #[error("no left identity")]
    NoLeftIdentity,

    #[error("no zero")]
    NoZero,

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error("invalid search spec: {0}")]
    InvalidSearch(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
