//! Sparse multivariate polynomials in grevlex order, rational functions,
//! Gröbner bases and Laurent monomial lattices.

mod groebner;
mod lattice;
mod monomial;
mod poly;
mod ratfunc;

pub use groebner::{buchberger, buchberger_with, is_groebner, normal_form, reduce, s_polynomial, GroebnerCaps, IdealBasis};
pub use lattice::{laurent_kernel_lattice, rational_rank, solve_integer, KernelLattice, LatticeIndex};
pub use monomial::Monomial;
pub use poly::{MultiPoly, PolyRing, Ring};
pub use ratfunc::{mp_substitute, RationalFunction};

use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("polynomials from different rings: {left} and {right}")]
    RingMismatch { left: String, right: String },
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("resource cap exceeded: at most {limit} {what}")]
    ResourceCap { what: &'static str, limit: usize },
}

/// `jac[i][j] = d fs[i] / d x_{vars[j]}`.
pub fn jacobian(fs: &[MultiPoly], vars: &[usize]) -> Vec<Vec<MultiPoly>> {
    fs.iter().map(|f| vars.iter().map(|&v| f.derivative(v)).collect()).collect()
}
