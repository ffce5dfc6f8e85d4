use g2rat_core::arith::{FieldKind, Scalar};
use g2rat_core::exec::Exec;
use g2rat_core::mpoly::{MultiPoly, PolyRing};
use g2rat_core::quadform::*;

fn q() -> FieldKind {
    FieldKind::Rational
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from(x)).collect()
}

#[test]
fn bilinearization_examples() {
    let ring = PolyRing::new(&["X"], q());
    let form = QuadraticForm::from_poly(&MultiPoly::parse(&ring, "X^2").unwrap()).unwrap();
    assert_eq!(*form.bilinearize().get(0, 0), Scalar::from(2));

    let l4 = lambda4_form(&q());
    let b = l4.bilinearize();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(*b.get(i, j), Scalar::from(i64::from(i != j)));
        }
    }
    assert_eq!(*b.get(3, 4), Scalar::from(1));
    assert_eq!(*b.get(3, 3), Scalar::from(0));
    // all-ones-off-diagonal 3x3 block has det 2, the z-block -1
    assert_eq!(b.determinant(), Scalar::from(-2));
}

#[test]
fn lambda4_smooth_over_q_and_f2() {
    let s = is_smooth_quadric(&lambda4_form(&q())).unwrap();
    assert!(s.smooth && s.branch == "det");
    let f2 = FieldKind::prime(2).unwrap();
    let s = is_smooth_quadric(&lambda4_form(&f2)).unwrap();
    assert!(s.smooth, "{}", s.certificate);
    assert_eq!(s.branch, "radical");
    assert_eq!(s.radical.len(), 1);
    let one = f2.one();
    let zero = f2.zero();
    assert_eq!(s.radical[0], vec![one.clone(), one.clone(), one, zero.clone(), zero]);
}

#[test]
fn degenerate_forms_are_singular() {
    let f2 = FieldKind::prime(2).unwrap();
    let ring = PolyRing::new(&["X1", "X2", "X3"], f2.clone());
    let xy_z2 = QuadraticForm::from_poly(&MultiPoly::parse(&ring, "X1*X2 + X3^2").unwrap()).unwrap();
    assert!(is_smooth_quadric(&xy_z2).unwrap().smooth);
    let xy = QuadraticForm::from_poly(&MultiPoly::parse(&ring, "X1*X2").unwrap()).unwrap();
    let s = is_smooth_quadric(&xy).unwrap();
    assert!(!s.smooth);
    assert_eq!(s.singular_point, Some(vec![f2.zero(), f2.zero(), f2.one()]));
    let qring = PolyRing::new(&["X1", "X2", "X3"], q());
    let xy = QuadraticForm::from_poly(&MultiPoly::parse(&qring, "X1*X2").unwrap()).unwrap();
    assert!(!is_smooth_quadric(&xy).unwrap().smooth);
}

#[test]
fn split_twist_is_lambda4() {
    assert_eq!(twist_form(&TwistData::split()), lambda4_form(&q()));
}

#[test]
fn default_twist_form() {
    let form = twist_form(&TwistData::default_instance());
    let ring = PolyRing::new(&["a", "b", "c", "u", "v"], q());
    assert_eq!(form.to_poly(&ring).unwrap(), MultiPoly::parse(&ring, "3*a^2 - 6*b*c + u^2 - 5*v^2").unwrap());
}

#[test]
fn twists_are_congruent_to_split_form() {
    for z in [TwistData::default_instance(), TwistData::split(), TwistData::from_coeffs(&[1, -1, 0, 1], &[1, 1, 1]).unwrap()] {
        let cert = split_congruence(&z).unwrap();
        assert!(cert.passed, "{z}: {cert}");
    }
}

#[test]
fn degree3_point_default() {
    let p = degree3_point(&TwistData::default_instance()).unwrap();
    assert!(p.certificate.passed, "{}", p.certificate);
    let t = p.field.generator().unwrap();
    assert_eq!(p.point, vec![p.field.from_i64(2), &t * &t, t, p.field.zero(), p.field.zero()]);
    let e: Vec<String> = p.idempotent.iter().map(ToString::to_string).collect();
    assert_eq!(e, ["1/3", "1/6*t^2", "1/6*t"]);
}

#[test]
fn degree3_point_split_and_reducible() {
    let p = degree3_point(&TwistData::split()).unwrap();
    assert_eq!(p.point, ints(&[1, 0, 0, 0, 0]));
    // (x-1)(x-2)(x-3): idempotent at 1 is (x-2)(x-3)/2
    let z = TwistData::from_coeffs(&[-6, 11, -6, 1], &[-5, 0, 1]).unwrap();
    let p = degree3_point(&z).unwrap();
    assert!(p.certificate.passed);
    assert_eq!(p.idempotent, vec![Scalar::from(3), Scalar::ratio(-5, 2), Scalar::ratio(1, 2)]);
}

#[test]
fn descent_default_takes_top_vector() {
    let z = TwistData::default_instance();
    let p = degree3_point(&z).unwrap();
    let out = springer_descend(&twist_form(&z), &p.point).unwrap();
    assert_eq!(out.branch, DescentBranch::TopVector);
    assert_eq!(out.point, ints(&[0, 1, 0, 0, 0]));
}

#[test]
fn descent_rational_input_unchanged() {
    let out = springer_descend(&lambda4_form(&q()), &ints(&[1, 0, 0, 0, 0])).unwrap();
    assert_eq!(out.branch, DescentBranch::Rational);
    assert_eq!(out.point, ints(&[1, 0, 0, 0, 0]));
}

#[test]
fn planted_instance_takes_cofactor_branch_and_matches_oracle() {
    let inst = branch_two_instance();
    assert_eq!(search_branch_two_instance(&inst.diagonal, [-2, 0, 0, 1], 1, Exec::Parallel), Some(inst.clone()));
    let out = springer_descend(&inst.form(), &inst.point().unwrap()).unwrap();
    assert_eq!(out.branch, DescentBranch::Cofactor);
    let ints_out: Vec<i64> = out.point.iter().map(|s| s.to_string().parse().unwrap()).collect();
    let h = ints_out.iter().map(|x| x.abs()).max().unwrap();
    let oracle = isotropic_vectors(&inst.form(), h, Exec::Parallel);
    assert!(oracle.contains(&ints_out), "{ints_out:?}");
    assert_eq!(oracle, isotropic_vectors(&inst.form(), h, Exec::Sequential));
}

#[test]
fn descent_identically_zero_branch() {
    // P = (x, x, 0, 0, 0) on X1^2 - X2^2 over QQ(2^(1/3))
    let inst = PlantedInstance { diagonal: vec![1, -1, 1, 1, 1], cubic: vec![-2, 0, 0, 1], coords: vec![[0, 1, 0], [0, 1, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]] };
    let out = springer_descend(&inst.form(), &inst.point().unwrap()).unwrap();
    assert_eq!(out.branch, DescentBranch::Identically);
    assert_eq!(out.point, ints(&[1, 1, 0, 0, 0]));
}

#[test]
fn descent_rejects_points_off_the_quadric() {
    let inst = PlantedInstance { diagonal: vec![1, 1, 1, 1, 1], cubic: vec![-2, 0, 0, 1], coords: vec![[1, 0, 0]; 5] };
    assert!(matches!(springer_descend(&inst.form(), &inst.point().unwrap()), Err(QuadError::NotOnQuadric(_))));
}

#[test]
fn stereographic_circle() {
    let ring = PolyRing::new(&["X", "Y", "Z"], q());
    let form = QuadraticForm::from_poly(&MultiPoly::parse(&ring, "X^2 + Y^2 - Z^2").unwrap()).unwrap();
    let par = stereographic_param(&form, &ints(&[1, 0, 1]), &ring).unwrap();
    assert!(par.certificate.passed, "{}", par.certificate);
}

#[test]
fn stereographic_twisted_and_split() {
    let z = TwistData::default_instance();
    let ring = PolyRing::new(&["a", "b", "c", "u", "v"], q());
    let par = stereographic_param(&twist_form(&z), &ints(&[0, 1, 0, 0, 0]), &ring).unwrap();
    assert!(par.certificate.passed, "{}", par.certificate);
    let ring = PolyRing::new(&["Y1", "Y2", "Y3", "Z1", "Z2"], q());
    let par = stereographic_param(&lambda4_form(&q()), &ints(&[1, 0, 0, 0, 0]), &ring).unwrap();
    assert!(par.certificate.passed, "{}", par.certificate);
}

#[test]
fn stereographic_rejects_singular_point() {
    let ring = PolyRing::new(&["X1", "X2", "X3"], q());
    let form = QuadraticForm::from_poly(&MultiPoly::parse(&ring, "X1*X2").unwrap()).unwrap();
    assert!(matches!(stereographic_param(&form, &ints(&[0, 0, 1]), &ring), Err(QuadError::SingularPoint(_))));
}
