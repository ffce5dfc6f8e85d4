use super::weyl::WeylGroup;
use super::G2Error;
use crate::arith::{FieldKind, Scalar};
use crate::cert::Certificate;
use crate::mpoly::{jacobian, Monomial, MultiPoly, PolyRing, Ring};

/// `f(a, b) -> f((a, b) A)` for each lattice matrix `A`.
fn act(ring: &Ring, m: &[[i64; 2]; 2], f: &MultiPoly) -> MultiPoly {
    let a = MultiPoly::var(ring, 0);
    let b = MultiPoly::var(ring, 1);
    let k = |n: i64| Scalar::from(n);
    let ia = &a.scale(&k(m[0][0])) + &b.scale(&k(m[1][0]));
    let ib = &a.scale(&k(m[0][1])) + &b.scale(&k(m[1][1]));
    f.substitute(ring, &[ia, ib]).expect("two images")
}

pub fn reynolds(group: &WeylGroup, f: &MultiPoly) -> MultiPoly {
    let ring = f.ring();
    let sum = group.elements.iter().fold(MultiPoly::zero(ring), |acc, g| &acc + &act(ring, &g.matrix, f));
    sum.scale(&Scalar::ratio(1, group.order() as i64))
}

pub fn is_invariant(group: &WeylGroup, f: &MultiPoly) -> bool {
    group.elements.iter().all(|g| act(f.ring(), &g.matrix, f) == *f)
}

#[derive(Clone, Debug)]
pub struct CartanInvariants {
    pub f2: MultiPoly,
    pub f6: MultiPoly,
    pub jacobian_det: MultiPoly,
}

/// Reynolds averages of degree 2 and 6 on `QQ[a, b]`.
pub fn weyl_invariants_on_cartan(group: &WeylGroup, field: &FieldKind) -> Result<(CartanInvariants, Certificate), G2Error> {
    if field.characteristic() != 0 {
        return Err(G2Error::UnsupportedCharacteristic(field.characteristic()));
    }
    let ring = PolyRing::new(&["a", "b"], FieldKind::Rational);
    let f2 = reynolds(group, &MultiPoly::parse(&ring, "a^2")?);
    let det = |f: &MultiPoly, g: &MultiPoly| {
        let j = jacobian(&[f.clone(), g.clone()], &[0, 1]);
        &(&j[0][0] * &j[1][1]) - &(&j[0][1] * &j[1][0])
    };
    let mut found = None;
    for i in (0..=6u32).rev() {
        let m = MultiPoly::from_terms(&ring, [(Monomial::new(vec![i, 6 - i]), Scalar::from(1))]);
        let f6 = reynolds(group, &m);
        if f6.is_zero() {
            continue;
        }
        let d = det(&f2, &f6);
        if !d.is_zero() {
            found = Some((f6, d));
            break;
        }
    }
    let Some((f6, jd)) = found else {
        return Err(G2Error::Structural("no degree-6 Reynolds average is independent of f2".into()));
    };
    let mut cert = Certificate::new("invariants on t");
    cert.record(format!("f2 = {f2}"));
    cert.record(format!("f6 = {f6}"));
    cert.require(f2.is_homogeneous() && f2.total_degree() == Some(2), "deg f2 = 2", "f2 not of degree 2");
    cert.require(f6.is_homogeneous() && f6.total_degree() == Some(6), "deg f6 = 6", "f6 not of degree 6");
    cert.require(is_invariant(group, &f2), "f2 invariant under all 12 elements", "f2 not invariant");
    cert.require(is_invariant(group, &f6), "f6 invariant under all 12 elements", "f6 not invariant");
    cert.require(!jd.is_zero(), format!("det d(f2,f6)/d(a,b) = {jd}"), "Jacobian determinant vanishes");
    cert.require(2 * 6 == group.order(), "2 * 6 = |W| = 12", format!("2 * 6 != |W| = {}", group.order()));
    Ok((CartanInvariants { f2, f6, jacobian_det: jd }, cert))
}
