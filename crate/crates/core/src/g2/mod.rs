//! The torus weights, Weyl group, Chevalley algebra and the
//! characteristic-free checks built on them.

mod chevalley;
mod equivariance;
mod freeness;
mod prop1;
mod reynolds;
mod weights;
mod weyl;

use thiserror::Error;

use crate::arith::ArithError;
use crate::geom::GeomError;
use crate::mpoly::PolyError;

pub use chevalley::{build_chevalley_algebra, inner, pairing, root_name, root_system, ChevalleyAlgebra, Root, DIM, H_ALPHA, H_BETA, POSITIVE_ROOTS};
pub use equivariance::{certify_chain_equivariance, mismatched_equivariance};
pub use freeness::generic_freeness_certificate;
pub use prop1::{from_int, prop1_differential_check, rational_cartan, regular_cartan_mod_p, symbolic_cartan, CartanElement};
pub use reynolds::{is_invariant, reynolds, weyl_invariants_on_cartan, CartanInvariants};
pub use weights::{build_weight_table, WeightTable};
pub use weyl::{
    certify_induced_action, certify_weyl, compose_model, cycle_notation, induced_action_on_model, model_perm_name, quadric_poly,
    search_weyl_candidates, synthesize_weyl_group, ModelPerm, WeylElement, WeylGroup, INVARIANT_EXPONENTS,
};

#[derive(Debug, Error)]
pub enum G2Error {
    #[error("{0}")]
    Structural(String),
    #[error("lattice solve: {0}")]
    LatticeSolve(String),
    #[error("x is not regular over {field}: root {root} vanishes")]
    NotRegular { root: String, field: String },
    #[error("characteristic {0} is not supported here")]
    UnsupportedCharacteristic(u64),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}
