use thiserror::Error;

/// Errors raised by ring construction, arithmetic, and section building.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{d} is a square modulo {p}; the extension would split")]
    SquareResidue { p: u64, d: u64 },

    /// 2 is not a unit in the coefficient ring (residue characteristic 2).
    #[error("2 is not invertible: residue characteristic is 2")]
    NonInvertibleTwo,

    #[error("element {0} is not invertible")]
    NonInvertible(String),

    #[error("no unit alpha with alpha + sigma(alpha) = 0 exists in this backend")]
    NoValidAlpha,

    #[error("alpha {0} is not a unit with alpha + sigma(alpha) = 0")]
    InvalidAlpha(String),

    #[error("element does not belong to this ring: {0}")]
    DescriptorMismatch(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// sigma(a_i) != (-1)^i a_i at the given 1-based index.
    #[error("coefficient a_{index} violates sigma(a_i) = (-1)^i a_i")]
    CodomainViolation { index: usize },

    #[error("matrix is not in the unitary Lie algebra (first offending entry ({row}, {col}))")]
    NotInLieAlgebra { row: usize, col: usize },

    #[error("symbolic oracle limited to n <= {max}, requested {n}")]
    CostBoundExceeded { n: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidDescriptor(_) => "invalid-descriptor",
            Error::NotPrime(_) => "not-prime",
            Error::SquareResidue { .. } => "square-residue",
            Error::NonInvertibleTwo => "non-invertible-2",
            Error::NonInvertible(_) => "non-invertible",
            Error::NoValidAlpha => "no-valid-alpha",
            Error::InvalidAlpha(_) => "invalid-alpha",
            Error::DescriptorMismatch(_) => "descriptor-mismatch",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::CodomainViolation { .. } => "codomain-violation",
            Error::NotInLieAlgebra { .. } => "not-in-lie-algebra",
            Error::CostBoundExceeded { .. } => "cost-bound-exceeded",
            Error::Parse(_) => "parse-error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
