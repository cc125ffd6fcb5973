use std::fmt;

use num_bigint::BigUint;

use crate::fnspec::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Where an evaluation failure happened during a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Point(BigUint),
    Pair(u64, u64),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Point(n) => write!(f, "n={n}"),
            Location::Pair(m, n) => write!(f, "(m,n)=({m},{n})"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("composition at n={n}: inner value {value} is not a positive integer")]
    Composition { n: BigUint, value: String },

    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),

    #[error("missing argument: {0}")]
    MissingArgument(String),

    #[error("invalid construction: {0}")]
    Construction(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("at {at}: {source}")]
    At {
        at: Location,
        #[source]
        source: Box<Error>,
    },

    #[error("malformed table: {0}")]
    Table(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn at_point(self, n: &BigUint) -> Self {
        match self {
            // keep the innermost location
            e @ Error::At { .. } => e,
            e => Error::At {
                at: Location::Point(n.clone()),
                source: Box::new(e),
            },
        }
    }

    pub(crate) fn at_pair(self, m: u64, n: u64) -> Self {
        Error::At {
            at: Location::Pair(m, n),
            source: Box::new(self),
        }
    }

    /// Strip location wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { source, .. } => source.root(),
            e => e,
        }
    }
}

pub(crate) fn zero_argument() -> Error {
    Error::domain("arithmetic functions are defined on positive integers")
}
