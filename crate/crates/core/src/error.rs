use thiserror::Error;

use crate::qcore::Rational;

/// Errors raised by the exact calculus and operator constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("deformation parameter must be positive, got {0}")]
    NonPositiveDeformation(Rational),

    #[error("q-factorial of a negative integer ({0})")]
    NegativeFactorial(i64),

    #[error("truncation order must be non-negative, got {0}")]
    NegativeOrder(i64),

    #[error("{len} coefficients do not fit in a series of order {order}")]
    TooManyCoefficients { len: usize, order: usize },

    #[error("non-invertible divisor: constant term is zero")]
    NonInvertibleDivisor,

    #[error("q-exponential argument must have a zero constant term")]
    NonzeroConstantTerm,

    #[error("vacuum parameter beta must be nonzero")]
    ZeroBeta,

    #[error(
        "order {order} leaves no room for {derivatives} q-derivatives (need at least {required})"
    )]
    InsufficientOrder {
        order: usize,
        derivatives: usize,
        required: usize,
    },

    #[error("transformation function index p = {0} must be even")]
    OddTransformationIndex(usize),

    #[error("factorization energy must be non-positive, got {0}")]
    PositiveFactorizationEnergy(Rational),

    #[error("cannot parse {0:?} as an exact rational")]
    ParseRational(String),
}

pub type Result<T, E = QError> = std::result::Result<T, E>;
