//! Crate-wide error type.
//!
//! Every fallible operation in the crate reports one of these variants.
//! Arithmetic traits (`Add`, `Mul`, ...) panic on domain mismatch or
//! division by zero instead, since those indicate programming errors;
//! checked variants returning [`Result`] exist wherever external input
//! can reach the failure.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands belong to different coefficient domains: {0} vs {1}")]
    DomainMismatch(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime field characteristic {0} too small: {1}")]
    CharacteristicTooSmall(u64, String),

    #[error("minimal polynomial must be monic of degree 2 or 3, got degree {0}")]
    UnsupportedExtensionDegree(usize),

    #[error("minimal polynomial is reducible: it has rational root {0}")]
    ReducibleMinimalPolynomial(String),

    #[error("element not representable in target domain: {0}")]
    UnrepresentableElement(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),

    #[error("invalid scheme: {0}")]
    InvalidScheme(String),

    #[error("ideal is zero: {0}")]
    ZeroIdeal(String),

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("iteration cap exceeded in {context} (cap {cap})")]
    CapExceeded { context: String, cap: usize },

    #[error("could not generate {needed} distinct points within {attempts} attempts")]
    RandomPointsExhausted { needed: usize, attempts: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
