use thiserror::Error;

/// Errors produced by the group, character and verification routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("permutation has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree must be at least 1")]
    EmptyDegree,

    #[error("degree {0} exceeds the supported maximum of {max}", max = crate::MAX_DEGREE)]
    DegreeTooLarge(usize),

    #[error("image array is not a bijection: {0}")]
    NotBijection(String),

    #[error("group order overflows 128 bits")]
    OrderOverflow,

    #[error("element is not a member of the group")]
    NotMember,

    #[error("group of order {order} exceeds the enumeration cap of {cap} elements")]
    EnumerationCapExceeded { order: u128, cap: usize },

    #[error("subgroup is not normal in the parent group")]
    NotNormal,

    #[error("not a subgroup of the given group")]
    NotSubgroup,

    #[error("class functions belong to different groups")]
    GroupMismatch,

    #[error("{k} is not a unit modulo {modulus}")]
    NotUnit { k: i64, modulus: u64 },

    #[error("no prime p = 1 (mod {exponent}) with p > 2*sqrt({order}) below {bound}")]
    NoDixonPrime {
        exponent: u64,
        order: u128,
        bound: u64,
    },

    #[error("modular eigenspace splitting failed: {0}")]
    SplittingFailure(String),

    #[error("lifting character values from the prime field failed: {0}")]
    LiftFailure(String),

    #[error("value does not lie in the cyclotomic field of conductor {0}")]
    NotInField(u64),

    #[error("inner product is not rational")]
    NonRationalInnerProduct,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("construction self-check failed: {0}")]
    SelfCheck(String),

    #[error("malformed group file: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
