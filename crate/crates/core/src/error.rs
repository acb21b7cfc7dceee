use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation degree must be positive")]
    EmptyDegree,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("images do not form a permutation of 0..{degree}")]
    NotAPermutation { degree: usize },

    #[error("group order {order} exceeds the enumeration threshold {threshold}")]
    ThresholdExceeded { order: u64, threshold: u64 },

    #[error("group order overflowed u64")]
    OrderOverflow,

    #[error("element is not a member of the group")]
    NotMember,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {p} does not divide the group order {order}")]
    PrimeNotDividing { p: u64, order: u64 },

    #[error("Sylow {p}-subgroup search stagnated after {attempts} attempts")]
    SylowStagnated { p: u64, attempts: usize },

    #[error("unsupported field GF({p}^{k})")]
    UnsupportedField { p: u64, k: u32 },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown catalog group {0:?}")]
    UnknownCatalog(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid group source: {0}")]
    Source(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
