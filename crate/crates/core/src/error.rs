use std::fmt;

use thiserror::Error;

/// What a cycle-notation parse rejected, with the byte offset of the offense.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {kind}")]
pub struct CycleParseError {
    pub position: usize,
    pub kind: CycleParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleParseErrorKind {
    /// A character that is not a digit, comma, parenthesis, or whitespace.
    UnexpectedChar(char),
    /// A point outside 1..=n.
    PointOutOfRange { point: usize, degree: usize },
    /// The same point named twice inside one cycle.
    RepeatedPoint(usize),
    /// Unbalanced or misplaced parentheses, missing separators, etc.
    Malformed(&'static str),
}

impl fmt::Display for CycleParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            CycleParseErrorKind::PointOutOfRange { point, degree } => {
                write!(f, "point {point} out of range 1..={degree}")
            }
            CycleParseErrorKind::RepeatedPoint(p) => {
                write!(f, "point {p} repeated within one cycle")
            }
            CycleParseErrorKind::Malformed(what) => write!(f, "{what}"),
        }
    }
}

/// Library-wide error type. Capacity variants are kept distinct so callers
/// can tell "this input is wrong" from "this input is too big for the
/// configured bounds".
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: size {requested} exceeds capacity bound {bound}")]
    Capacity {
        what: &'static str,
        requested: u64,
        bound: u64,
    },

    #[error(transparent)]
    Parse(#[from] CycleParseError),

    #[error("{0}")]
    InvalidInput(String),

    #[error("generators have mixed degrees: {0} vs {1}")]
    MixedDegrees(usize, usize),

    #[error("claimed subgroup is not contained in the ambient group")]
    NotASubgroup,

    #[error("transposition graph is disconnected: the set does not generate the symmetric group")]
    Disconnected,

    #[error("precondition failed: {0}")]
    Precondition(&'static str),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
