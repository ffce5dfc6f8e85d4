use std::sync::Arc;

use g2rat_core::arith::{FieldKind, IntMatrix, Scalar};
use g2rat_core::geom::chain::{cremona_factor, model_action, quotient_data, LambdaChain};
use g2rat_core::geom::*;
use g2rat_core::mpoly::{MultiPoly, PolyRing, RationalFunction};

fn chain() -> LambdaChain {
    LambdaChain::build().unwrap()
}

#[test]
fn every_link_is_well_defined_and_birational() {
    let c = chain();
    for link in c.links() {
        let cert = check_birational_pair(link.forward, link.backward).unwrap();
        assert!(cert.passed, "{}: {cert}", link.name);
        let swapped = check_birational_pair(link.backward, link.forward).unwrap();
        assert!(swapped.passed, "{} swapped: {swapped}", link.name);
    }
    assert!(check_well_defined(&c.quotient).unwrap().passed);
}

#[test]
fn cremona_pullbacks_factor_through_p() {
    let c = chain();
    let p = cremona_factor(&c.lambda3).unwrap();
    let l3 = &c.lambda3.generators()[0];
    let l4 = &c.lambda4.generators()[0];
    let pulled4 = c.cremona_34.pullback(l4).unwrap();
    assert!(pulled4.is_polynomial());
    assert_eq!(pulled4.num(), &(&p * l3));
    let pulled3 = c.cremona_43.pullback(l3).unwrap();
    assert_eq!(pulled3.num(), &(&p.pow(2) * l4));
}

#[test]
fn cremona_squared_is_p_cubed_times_identity() {
    let c = chain();
    let cc = compose(&c.cremona_34, &c.cremona_43).unwrap();
    let p3 = cremona_factor(&c.lambda3).unwrap().pow(3);
    for (i, coord) in cc.coords().iter().enumerate() {
        assert_eq!(coord.num(), &(&p3 * &MultiPoly::var(c.lambda3.ring(), i)));
    }
}

#[test]
fn section_after_projection_is_identity_on_lambda2() {
    let c = chain();
    let comp = compose(&c.l2_to_l3, &c.l3_to_l2).unwrap();
    let id = RationalMapDescriptor::identity(&c.lambda2);
    assert!(maps_agree(&c.lambda2, true, comp.coords(), id.coords(), "s.p").unwrap().passed);
}

#[test]
fn forgetful_projection_is_not_birational() {
    let c = chain();
    let r = PolyRing::new(&["Y1", "Y2", "Y3", "Z1"], FieldKind::Rational);
    let p3 = Arc::new(VarietyDescriptor::projective("P3", &r, vec![]).unwrap());
    let forget = RationalMapDescriptor::from_polys(
        "forget-Z2",
        &c.lambda3,
        &p3,
        ["Y1", "Y2", "Y3", "Z1"].iter().map(|s| MultiPoly::parse(c.lambda3.ring(), s).unwrap()).collect(),
    )
    .unwrap();
    let back = RationalMapDescriptor::from_polys(
        "repeat-Z1",
        &p3,
        &c.lambda3,
        ["Y1", "Y2", "Y3", "Z1", "Z1"].iter().map(|s| MultiPoly::parse(&r, s).unwrap()).collect(),
    )
    .unwrap();
    assert!(!check_birational_pair(&forget, &back).unwrap().passed);
}

#[test]
fn unit_pullback_is_rejected() {
    let r = PolyRing::new(&["t"], FieldKind::Rational);
    let line = Arc::new(VarietyDescriptor::affine("A1", &r, vec![]).unwrap());
    let s = PolyRing::new(&["x"], FieldKind::Rational);
    let origin = Arc::new(VarietyDescriptor::parse("origin", Ambient::Affine, &s, &["x"]).unwrap());
    let map = RationalMapDescriptor::from_polys("const1", &line, &origin, vec![MultiPoly::one(&r)]).unwrap();
    let cert = check_well_defined(&map).unwrap();
    assert!(!cert.passed);
    assert!(cert.failure.unwrap().contains("remainder 1"));
}

#[test]
fn three_cycle_against_its_inverse_fails() {
    let c = chain();
    let sigma = [1usize, 2, 0, 3, 4];
    let inv = [2usize, 0, 1, 3, 4];
    let s3 = model_action("c", &sigma, &c.lambda3).unwrap();
    let s4 = model_action("c", &sigma, &c.lambda4).unwrap();
    let s4_inv = model_action("c^-1", &inv, &c.lambda4).unwrap();
    assert!(check_equivariant(&c.cremona_34, &[(s3.clone(), s4)]).unwrap().passed);
    assert!(!check_equivariant(&c.cremona_34, &[(s3, s4_inv)]).unwrap().passed);
    assert!(check_equivariant(&c.cremona_34, &[]).unwrap().passed);
}

#[test]
fn z_swap_commutes_with_the_closure_map() {
    let c = chain();
    let swap = [0usize, 1, 2, 4, 3];
    let a1 = model_action("s2", &swap, &c.lambda1).unwrap();
    let a2 = model_action("s2", &swap, &c.lambda2).unwrap();
    assert_eq!(a2.perm(), &[0, 1, 2, 3, 5, 4]);
    assert!(check_equivariant(&c.l1_to_l2, &[(a1, a2)]).unwrap().passed);
}

#[test]
fn action_inverse_is_exact() {
    let r = PolyRing::indexed("x", 4, FieldKind::Rational);
    let a = MonomialAction::new("a", vec![2, 0, 3, 1], vec![Scalar::from(2), Scalar::from(-1), Scalar::ratio(1, 3), Scalar::from(5)]).unwrap();
    assert!(a.compose(&a.inverse()).is_identity());
    assert!(a.inverse().compose(&a).is_identity());
    let f = MultiPoly::parse(&r, "x1^2*x2 + 3*x4").unwrap();
    let round = a.inverse().apply_poly(&a.apply_poly(&f).unwrap()).unwrap();
    assert_eq!(round, f);
}

#[test]
fn quotient_generators_certified() {
    let data = quotient_data().unwrap();
    let cert = quotient_generators_check(&data).unwrap();
    assert!(cert.passed, "{cert}");
}

#[test]
fn quotient_negative_controls() {
    let data = quotient_data().unwrap();
    let ring = data.chart.ring().clone();
    let mono = |s: &str| RationalFunction::from_poly(MultiPoly::parse(&ring, s).unwrap());

    let mut squared = data.clone();
    squared.invariants[3].1 = mono("x1^2*x5^2*x6^2");
    squared.invariants.truncate(4);
    let cert = quotient_generators_check(&squared).unwrap();
    assert!(cert.failure.unwrap().contains("index 2"));

    let mut short = data.clone();
    short.invariants.truncate(3);
    assert!(quotient_generators_check(&short).unwrap().failure.unwrap().contains("rank 3"));

    let mut with_x1 = data.clone();
    with_x1.invariants.push(("x1".into(), mono("x1")));
    assert!(quotient_generators_check(&with_x1).unwrap().failure.unwrap().contains("weight (1,0)"));
}

#[test]
fn doubled_weights_change_the_lattice() {
    let mut data = quotient_data().unwrap();
    data.weights = IntMatrix::from_cols(&[vec![2, 0], vec![0, 2], vec![2, -2], vec![-2, 2], vec![0, -2], vec![-2, 0]]);
    assert!(quotient_generators_check(&data).unwrap().passed);
}
