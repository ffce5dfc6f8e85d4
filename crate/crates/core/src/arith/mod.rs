//! Exact scalar arithmetic: rationals, prime fields, simple extensions,
//! univariate polynomials, étale algebras, dense linear algebra and integer
//! lattice normal forms.

mod etale;
mod ext;
mod intmat;
mod matrix;
mod scalar;
mod upoly;

pub use etale::{etale_split_idempotent, mul_mod, nf_trace_norm, EtaleAlgebra, MonogenicAlgebra, MAX_ETALE_DEGREE};
pub use ext::{ExtElem, ExtField, MAX_CERTIFIED_DEGREE};
pub use intmat::{smith_normal_form, IntMatrix, Snf};
pub use matrix::{exact_rank_and_kernel, FieldElement, Matrix};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use scalar::{is_prime, FieldKind, Fp, Scalar, DEFAULT_PRIME_CAP};
pub use upoly::{factor_small, format_univariate, primitive_integer_model, UniPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands from different fields: {left} and {right}")]
    FieldMismatch { left: String, right: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} exceeds the configured cap {cap}")]
    PrimeAboveCap { p: u64, cap: u64 },
    #[error("degree {degree} is above the supported maximum {max}")]
    UnsupportedDegree { degree: usize, max: usize },
    #[error("{0} is not irreducible")]
    NotIrreducible(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("{0} is not squarefree")]
    NotSquarefree(String),
    #[error("the given element is not a root")]
    InvalidRoot,
    #[error("coefficient too large for the rational-root search")]
    CoefficientTooLarge,
    #[error("{0} has no image in this field")]
    NotRepresentable(String),
}
