use thiserror::Error;

use crate::algebra::Rational;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    /// The mask sum is not `2^(-n-1)` for any `n >= 0`.
    #[error("mask does not refine a polynomial (mask sum is {0})")]
    NotRefiningPolynomial(Rational),

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("operation requires a polynomial of degree at least 1")]
    ConstantPolynomial,

    #[error("mask does not refine the polynomial")]
    NotRefinable,

    /// Sum-one mask whose antiderivative condition has no solution.
    #[error("no integration constant makes the antiderivative refinable")]
    NoIntegrationConstant,

    #[error("invalid nodes: {0}")]
    InvalidNodes(String),

    #[error("negative order {0}")]
    NegativeOrder(i64),

    #[error("starting polynomial has degree {found:?}, expected {expected}")]
    StartDegree {
        expected: usize,
        found: Option<usize>,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
