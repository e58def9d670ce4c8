use std::path::PathBuf;

/// Errors produced by group construction, structure queries and file I/O.
#[derive(thiserror::Error, Debug)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {degree} exceeds the configured cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("group order {order} exceeds the element enumeration cap of {cap}")]
    EnumerationCap { order: u128, cap: usize },
    #[error("group order {order} exceeds the subgroup lattice cap of {cap}")]
    LatticeCap { order: u64, cap: usize },
    #[error("group order does not fit in 128 bits")]
    OrderOverflow,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("element {0} is not a member of the group")]
    NotMember(String),
    #[error("subgroups belong to different ambient groups")]
    AmbientMismatch,
    #[error("{0} is not a subgroup of the given group")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("quotient index {index} exceeds the degree cap of {cap}")]
    IndexCap { index: u64, cap: usize },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("malformed group spec: {0}")]
    MalformedSpec(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("unknown builtin example {0:?}")]
    UnknownExample(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
