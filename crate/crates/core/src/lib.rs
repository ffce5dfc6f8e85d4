//! Exact certificates for the rationality of the adjoint quotient of the
//! split Lie algebra of type G2.

pub mod arith;
pub mod cert;
pub mod exec;
pub mod g2;
pub mod geom;
pub mod mpoly;
pub mod quadform;
