use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("exact division is not available in {0}")]
    NoDivision(String),
    #[error("modulus {0} is not a prime below 65536")]
    NotPrime(u64),
    #[error("invalid multi-index {entries:?}: {reason}")]
    InvalidMultiIndex { entries: Vec<u32>, reason: String },
    #[error("pair ({i:?}, {j}) is not semistandard")]
    NotSemistandard { i: Vec<u32>, j: u32 },
    #[error("pair ({i:?}, {j}) does not lie in the class S_{alpha}")]
    NotInAlphaClass { i: Vec<u32>, j: u32, alpha: usize },
    #[error("content {0:?} contains a repeated entry")]
    RepeatedContent(Vec<u32>),
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("wrong space: {0}")]
    WrongSpace(String),
    #[error("exponent {exponent} out of range 0..={cap}")]
    ExponentOutOfRange { exponent: u32, cap: u32 },
    #[error("the Lie algebra action needs characteristic zero, got {0}")]
    LieUnsupported(String),
    #[error("{0} is not a field")]
    NotAField(String),
    #[error("vector is not in the kernel of the multiplication map")]
    NotInKernel,
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
