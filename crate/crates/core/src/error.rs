use thiserror::Error;

use crate::algebra::FieldTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldTag, FieldTag),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("scalar {0} is not an element of {1}")]
    NotInField(String, FieldTag),

    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("sequence is not nonincreasing: {0:?}")]
    NotNonincreasing(Vec<i64>),

    #[error("partition has a negative part: {0:?}")]
    NegativePart(Vec<i64>),

    #[error("{what}: expected length {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degree undefined for the zero matrix")]
    ZeroMatrix,

    #[error("operation requires a non-constant matrix")]
    ConstantMatrix,

    #[error("not a divisibility chain: {0}")]
    NotAChain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("target is infeasible: {0}")]
    Infeasible(String),

    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("theorem {theorem} needs target {field}")]
    MissingField { theorem: String, field: &'static str },

    #[error("parse error: {0}")]
    Parse(String),
}
