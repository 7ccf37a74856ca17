//! Error type shared by every module in the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Library errors. `Parse` carries the byte offset of the offending token so
/// front ends can point at it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no square-free part")]
    ZeroPolynomial,
    #[error("polynomial is not square-free: gcd with its derivative has degree {gcd_degree}")]
    NotSquareFree { gcd_degree: usize },
    #[error("custom basis supplies {len} polynomials, index {index} is out of range")]
    CustomIndexOutOfRange { index: usize, len: usize },
    #[error("invalid basis at index {index}: {reason}")]
    InvalidBasis { index: usize, reason: String },
    #[error("sequence index {index} is outside the explicit window of length {len}")]
    SequenceWindow { index: usize, len: usize },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("polynomial degree {degree} exceeds the operator window {max_order}")]
    DegreeExceedsOrder { degree: usize, max_order: usize },
    #[error("verification window {window} exceeds the operator window {max_order}")]
    WindowExceedsOrder { window: usize, max_order: usize },
    #[error("coefficient Q_{k} has degree {degree}, which exceeds its index")]
    CoefficientDegreeTooHigh { k: usize, degree: usize },
    #[error("eigenvalue collision: a_{m} = a_{k}, the degree-{m} eigenvector is not unique")]
    EigenvalueCollision { m: usize, k: usize },
    #[error("truncation to order {target_order} would drop the nonzero coefficient Q_{k}")]
    TruncationLoss { k: usize, target_order: usize },
    #[error("interpolation check failed at n = {n}: leading values are inconsistent with the claimed degree")]
    InterpolationMismatch { n: usize },
    #[error("action table is empty")]
    EmptyAction,
    #[error("invalid operator file: {message}")]
    InvalidOperatorFile { message: String },
}
