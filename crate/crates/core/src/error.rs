use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DegreeMismatch { left: usize, right: usize },
    InvalidPermutation(String),
    /// Group closure grew past the element cap.
    CapExceeded { cap: usize },
    /// Stored image data (elements × degree) would exceed the point budget.
    StorageExceeded { limit: usize },
    NotMember,
    /// Graph query on something that is not a vertex (identity, equal pair).
    InvalidVertex(String),
    NotNormal,
    NotPrime(u64),
    InvalidField(String),
    InvalidFamily(String),
    EmptyVertexSet,
    NoCyclicComplement,
    Uncomputable(String),
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::CapExceeded { cap } => write!(f, "cap of {cap} exceeded"),
            Error::StorageExceeded { limit } => {
                write!(f, "enumeration would store more than {limit} image points")
            }
            Error::NotMember => f.write_str("element is not a member of the group"),
            Error::InvalidVertex(msg) => write!(f, "invalid vertex: {msg}"),
            Error::NotNormal => f.write_str("subgroup is not normal"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::InvalidField(msg) => write!(f, "invalid field: {msg}"),
            Error::InvalidFamily(msg) => write!(f, "invalid affine family: {msg}"),
            Error::EmptyVertexSet => {
                f.write_str("commuting graph undefined: group is abelian (no non-central elements)")
            }
            Error::NoCyclicComplement => {
                f.write_str("no cyclic complement found in a verified Frobenius kernel chain")
            }
            Error::Uncomputable(msg) => write!(f, "uncomputable: {msg}"),
            Error::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
