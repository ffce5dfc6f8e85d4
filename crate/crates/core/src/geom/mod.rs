//! Varieties, rational maps between them, monomial group actions, and the
//! certified checks run on the chain of models.

mod action;
pub mod chain;
mod map;
mod quotient;
mod variety;

pub use action::{check_equivariant, MonomialAction};
pub use map::{check_birational_pair, check_well_defined, clear_denominators, compose, maps_agree, RationalMapDescriptor};
pub use quotient::{laurent_exponent, quotient_generators_check, QuotientData};
pub use variety::{Ambient, VarietyDescriptor};

use thiserror::Error;

use crate::mpoly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("{0} has a unit ideal")]
    EmptyVariety(String),
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
    #[error("{0} lives in the wrong ring")]
    WrongRing(String),
    #[error("degenerate map: {0}")]
    Degenerate(String),
    #[error("cannot compose: target {left} is not source {right}")]
    VarietyMismatch { left: String, right: String },
    #[error("action {0} is not invertible")]
    NotInvertible(String),
}

impl From<crate::arith::ArithError> for GeomError {
    fn from(e: crate::arith::ArithError) -> Self {
        GeomError::Poly(PolyError::Arith(e))
    }
}
