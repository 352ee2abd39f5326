use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("the unit ideal is not allowed here")]
    UnitIdeal,
    #[error("ideal does not have finite colength")]
    InfiniteColength,
    #[error("variable index {index} out of range for dimension {dimension}")]
    VariableOutOfRange { index: usize, dimension: usize },
    #[error("negative power {0}")]
    NegativePower(i64),
    #[error("coefficient must be positive, got {0}")]
    NonPositiveCoefficient(Rational),
    #[error("coefficient must be nonnegative, got {0}")]
    NegativeCoefficient(Rational),
    #[error("polyhedron has no positive-level facets")]
    NoFacets,
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is degenerate along {face}")]
    Degenerate { face: String },
    #[error("nondegeneracy could only be assumed (not proven); pass an explicit override")]
    NondegeneracyAssumed,
    #[error("polynomial is a unit")]
    UnitPolynomial,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("Groebner step cap of {0} reductions exceeded")]
    StepCapExceeded(usize),
    #[error("sequence is not nondecreasing at index {0}")]
    NonMonotone(usize),
    #[error("malformed root list: {0}")]
    MalformedRoots(String),
    #[error("jump {0} outside (0, 1]")]
    JumpOutOfRange(Rational),
    #[error("parse error in `{field}`: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}
