use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("value is not 2-integral: {0}")]
    NotTwoIntegral(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("odd permutation {0} is not in A4")]
    OddPermutation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("generator relations fail: {0}")]
    InvalidRepresentation(String),

    #[error("search caps exhausted without a decision: {0}")]
    Indeterminate(String),

    #[error("cover map is not surjective: {0}")]
    Singular(String),

    #[error("mod-2 top does not decompose into trivial and two-dimensional parts: {0}")]
    TopDecompositionFailure(String),

    #[error("projective multiplicities are not nonnegative integers: {0}")]
    NonIntegral(String),

    #[error("unresolved product {0} x {1}")]
    UnresolvedProduct(String, String),

    #[error("construction failed: {0}")]
    ConstructionFailure(String),
}
