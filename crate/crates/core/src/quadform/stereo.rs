use std::sync::Arc;

use super::{is_smooth_quadric, QuadError, QuadraticForm};
use crate::arith::Scalar;
use crate::cert::Certificate;
use crate::geom::{check_birational_pair, RationalMapDescriptor, VarietyDescriptor};
use crate::mpoly::{MultiPoly, PolyRing, Ring};

/// Both directions of the projection from a rational point, with their
/// birationality certificate.
#[derive(Clone, Debug)]
pub struct Parametrization {
    pub quadric: Arc<VarietyDescriptor>,
    pub space: Arc<VarietyDescriptor>,
    /// Index of the coordinate hyperplane `x_k = 0` used as the target of the projection.
    pub hyperplane: usize,
    pub forward: RationalMapDescriptor,
    pub backward: RationalMapDescriptor,
    pub certificate: Certificate,
}

/// Lines through `p` meet the hyperplane `x_k = 0` (with `p_k != 0`) in `u`;
/// the second intersection is `q(u) p - b(p, u) u`. The inverse projects
/// from `p`: `x -> p_k x - x_k p`, dropping the `k`-th coordinate.
pub fn stereographic_param(q: &QuadraticForm, p: &[Scalar], ring: &Ring) -> Result<Parametrization, QuadError> {
    let n = q.dim();
    if p.len() != n {
        return Err(QuadError::DimensionMismatch { expected: n, got: p.len() });
    }
    let value = q.eval(p)?;
    if !value.is_zero() {
        return Err(QuadError::NotOnQuadric(value.to_string()));
    }
    let smooth = is_smooth_quadric(q)?;
    let b = q.bilinearize();
    let bp = b.mul_vec(p);
    if bp.iter().all(Scalar::is_zero) {
        return Err(QuadError::SingularPoint(format!("{p:?}")));
    }
    let k = p.iter().position(|c| !c.is_zero()).ok_or(QuadError::ZeroVector)?;

    let quadric = Arc::new(VarietyDescriptor::projective("quadric", ring, vec![q.to_poly(ring)?])?);
    let names: Vec<String> = (1..n).map(|i| format!("t{i}")).collect();
    let pring = PolyRing::new(&names, ring.field().clone());
    let space = Arc::new(VarietyDescriptor::projective(&format!("P{}", n - 2), &pring, Vec::new())?);

    // u in the hyperplane, as a vector of linear forms on the parameter space
    let t = MultiPoly::vars(&pring);
    let mut u: Vec<MultiPoly> = Vec::with_capacity(n);
    let mut it = t.iter();
    for i in 0..n {
        u.push(if i == k { MultiPoly::zero(&pring) } else { it.next().expect("n - 1 parameters").clone() });
    }
    let mut qu = MultiPoly::zero(&pring);
    for i in 0..n {
        for j in i..n {
            qu = &qu + &(&u[i] * &u[j]).scale(q.coeff(i, j));
        }
    }
    let bpu = bp.iter().zip(&u).fold(MultiPoly::zero(&pring), |acc, (c, ui)| &acc + &ui.scale(c));
    let forward_coords: Vec<MultiPoly> = (0..n).map(|i| &qu.scale(&p[i]) - &(&bpu * &u[i])).collect();
    let forward = RationalMapDescriptor::from_polys("stereographic", &space, &quadric, forward_coords)?;

    let x = MultiPoly::vars(ring);
    let backward_coords: Vec<MultiPoly> = (0..n).filter(|&i| i != k).map(|i| &x[i].scale(&p[k]) - &x[k].scale(&p[i])).collect();
    let backward = RationalMapDescriptor::from_polys("projection", &quadric, &space, backward_coords)?;

    let mut certificate = Certificate::new("stereographic parametrization");
    certificate.absorb(smooth.certificate);
    certificate.record(format!("projecting to x{} = 0", k + 1));
    certificate.absorb(check_birational_pair(&forward, &backward)?);
    Ok(Parametrization { quadric, space, hyperplane: k, forward, backward, certificate })
}
