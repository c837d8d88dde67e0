use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("maps live on different spaces: {0}")]
    SpaceMismatch(String),

    #[error("arity {arity} exceeds the supported cap of {cap}")]
    ArityCapExceeded { arity: usize, cap: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("the given map is not a deformation map")]
    NotADeformationMap,

    #[error("characteristic {characteristic} is too small: {reason}")]
    CharacteristicTooSmall { characteristic: u64, reason: String },

    #[error("the structure is not a proto-twilled Leibniz algebra")]
    InvalidOmega,

    #[error("the element is not a Maurer-Cartan element")]
    NotMaurerCartan,

    #[error("invalid example input: {0}")]
    InvalidExampleInput(String),

    #[error("enumeration needs {needed} candidates but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("the bilinear form is not symmetric")]
    NotSymmetric,

    #[error("element has components outside the selected subalgebra: {0}")]
    OutsideSubalgebra(String),

    #[error("degree mismatch: {0}")]
    Degree(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn shape(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}
