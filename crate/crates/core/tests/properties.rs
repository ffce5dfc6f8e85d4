use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use g2rat_core::arith::{smith_normal_form, ExtField, FieldKind, IntMatrix, Matrix, Scalar, UniPoly};
use g2rat_core::exec::Exec;
use g2rat_core::g2::{build_chevalley_algebra, DIM};
use g2rat_core::geom::{check_birational_pair, compose, maps_agree, RationalMapDescriptor, VarietyDescriptor};
use g2rat_core::mpoly::{IdealBasis, Monomial, MultiPoly, PolyRing, Ring};
use g2rat_core::quadform::{degree3_point, springer_descend, twist_form, QuadraticForm, TwistData};

fn ring3() -> Ring {
    PolyRing::new(&["x", "y", "z"], FieldKind::Rational)
}

fn poly(ring: &Ring, terms: &[([u32; 3], i64)]) -> MultiPoly {
    MultiPoly::from_terms(ring, terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), Scalar::from(*c))))
}

fn terms() -> impl Strategy<Value = Vec<([u32; 3], i64)>> {
    prop::collection::vec(([0u32..3, 0u32..3, 0u32..3], -5i64..=5), 0..5)
}

fn field() -> impl Strategy<Value = FieldKind> {
    prop_oneof![
        Just(FieldKind::Rational),
        prop::sample::select(vec![2u64, 3, 5, 7, 97]).prop_map(|p| FieldKind::prime(p).unwrap()),
        Just({
            let f3 = FieldKind::prime(3).unwrap();
            FieldKind::Extension(ExtField::new(&UniPoly::from_i64(f3, &[1, 0, 1]), "t").unwrap())
        }),
    ]
}

fn element(k: &FieldKind, a: i64, b: i64, d: i64) -> Scalar {
    let base = match k {
        FieldKind::Rational => Scalar::ratio(a, d),
        _ => k.from_i64(a),
    };
    match k.generator() {
        Some(t) => &base + &(&k.from_i64(b) * &t),
        None => base,
    }
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..4, 1usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn plane() -> Arc<VarietyDescriptor> {
    let r = PolyRing::new(&["u", "v", "w"], FieldKind::Rational);
    Arc::new(VarietyDescriptor::projective("P2", &r, vec![]).unwrap())
}

fn linear_map(name: &str, p: &Arc<VarietyDescriptor>, a: &[[i64; 3]; 3]) -> RationalMapDescriptor {
    let x = MultiPoly::vars(p.ring());
    let coords = a.iter().map(|row| (0..3).fold(MultiPoly::zero(p.ring()), |acc, j| &acc + &x[j].scale(&Scalar::from(row[j])))).collect();
    RationalMapDescriptor::from_polys(name, p, p, coords).unwrap()
}

fn det3(a: &[[i64; 3]; 3]) -> i64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

fn adjugate(a: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
            let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
            out[i][j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
        }
    }
    out
}

fn mat3() -> impl Strategy<Value = [[i64; 3]; 3]> {
    prop::array::uniform3(prop::array::uniform3(-3i64..=3))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(k in field(), v in prop::array::uniform9(-40i64..=40), d in 1i64..9) {
        let a = element(&k, v[0], v[1], d);
        let b = element(&k, v[2], v[3], d + 1);
        let c = element(&k, v[4], v[5], 1);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.checked_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn smith_normal_form_is_a_certificate(rows in int_matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d.clone());
        prop_assert!(snf.u.determinant().abs().is_one());
        prop_assert!(snf.v.determinant().abs().is_one());
        let divs = snf.elementary_divisors();
        for w in divs.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        for d in &divs {
            prop_assert!(d.is_positive());
        }
    }

    #[test]
    fn rank_plus_nullity(rows in int_matrix(), p in prop::sample::select(vec![0u64, 2, 3, 5])) {
        let k = if p == 0 { FieldKind::Rational } else { FieldKind::prime(p).unwrap() };
        let cols = rows[0].len();
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| k.from_i64(x)).collect()).collect(), &k.one());
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn leibniz_rule(f in terms(), g in terms(), var in 0usize..3) {
        let r = ring3();
        let (f, g) = (poly(&r, &f), poly(&r, &g));
        let lhs = (&f * &g).derivative(var);
        let rhs = &(&f.derivative(var) * &g) + &(&f * &g.derivative(var));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(f in terms(), g in terms(), imgs in prop::array::uniform3(terms())) {
        let r = ring3();
        let (f, g) = (poly(&r, &f), poly(&r, &g));
        let images: Vec<MultiPoly> = imgs.iter().map(|t| poly(&r, t)).collect();
        let sub = |p: &MultiPoly| p.substitute(&r, &images).unwrap();
        prop_assert_eq!(sub(&(&f * &g)), &sub(&f) * &sub(&g));
        prop_assert_eq!(sub(&(&f + &g)), &sub(&f) + &sub(&g));
    }

    #[test]
    fn normal_form_decides_membership(f in terms(), h in terms(), gens in prop::collection::vec(terms(), 1..3)) {
        let r = ring3();
        let gens: Vec<MultiPoly> = gens.iter().map(|t| poly(&r, t)).collect();
        let ideal = IdealBasis::new(&r, gens.clone());
        let f = poly(&r, &f);
        let nf = ideal.normal_form(&f).unwrap();
        prop_assert_eq!(ideal.normal_form(&nf).unwrap(), nf.clone());
        let shifted = &f + &(&poly(&r, &h) * &gens[0]);
        prop_assert_eq!(ideal.normal_form(&shifted).unwrap(), nf);
        for g in &gens {
            prop_assert!(ideal.contains(g).unwrap());
        }
    }

    #[test]
    fn bilinearization_identity(table in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 4),
                                x in prop::array::uniform4(-9i64..=9), y in prop::array::uniform4(-9i64..=9),
                                p in prop::sample::select(vec![0u64, 2, 3])) {
        let k = if p == 0 { FieldKind::Rational } else { FieldKind::prime(p).unwrap() };
        let table: Vec<Vec<Scalar>> = table.iter().map(|r| r.iter().map(|&c| Scalar::from(c)).collect()).collect();
        let q = QuadraticForm::from_table(&k, &table).unwrap();
        let x: Vec<Scalar> = x.iter().map(|&c| k.from_i64(c)).collect();
        let y: Vec<Scalar> = y.iter().map(|&c| k.from_i64(c)).collect();
        let by = q.bilinearize().mul_vec(&y);
        let xby = x.iter().zip(&by).fold(k.zero(), |acc, (u, v)| &acc + &(u * v));
        prop_assert_eq!(q.polar(&x, &y).unwrap(), xby);
        let sum: Vec<Scalar> = x.iter().zip(&y).map(|(u, v)| u + v).collect();
        prop_assert_eq!(q.eval(&sum).unwrap(), &(&q.eval(&x).unwrap() + &q.eval(&y).unwrap()) + &q.polar(&x, &y).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn composition_is_associative(a in mat3(), b in mat3(), c in mat3()) {
        let p = plane();
        let (fa, fb, fc) = (linear_map("a", &p, &a), linear_map("b", &p, &b), linear_map("c", &p, &c));
        let left = compose(&compose(&fa, &fb).unwrap(), &fc).unwrap();
        let right = compose(&fa, &compose(&fb, &fc).unwrap()).unwrap();
        prop_assert!(maps_agree(&p, true, left.coords(), right.coords(), "assoc").unwrap().passed);
    }

    #[test]
    fn birationality_is_symmetric(a in mat3(), b in mat3()) {
        let p = plane();
        let fa = linear_map("a", &p, &a);
        let inv = linear_map("adj", &p, &adjugate(&a));
        let other = linear_map("b", &p, &b);
        let forward = check_birational_pair(&fa, &inv).unwrap().passed;
        prop_assert_eq!(forward, check_birational_pair(&inv, &fa).unwrap().passed);
        prop_assert_eq!(forward, det3(&a) != 0);
        prop_assert_eq!(check_birational_pair(&fa, &other).unwrap().passed, check_birational_pair(&other, &fa).unwrap().passed);
    }

    #[test]
    fn ad_is_a_homomorphism(u in prop::array::uniform14(-3i64..=3), v in prop::array::uniform14(-3i64..=3), w in prop::array::uniform14(-3i64..=3)) {
        let alg = build_chevalley_algebra(Exec::Sequential).unwrap();
        let lhs = alg.bracket(&alg.bracket(&u, &v), &w);
        let a = alg.bracket(&u, &alg.bracket(&v, &w));
        let b = alg.bracket(&v, &alg.bracket(&u, &w));
        for i in 0..DIM {
            prop_assert_eq!(lhs[i], a[i] - b[i]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn descent_outputs_rational_zeros(c1 in -4i64..=4, c0 in -6i64..=6, d in prop::sample::select(vec![-7i64, -3, -1, 2, 3, 5, 6])) {
        let twist = TwistData::from_coeffs(&[c0, c1, 0, 1], &[-d, 0, 1]);
        prop_assume!(twist.is_ok());
        let twist = twist.unwrap();
        let q = twist_form(&twist);
        let p = degree3_point(&twist).unwrap();
        prop_assert!(p.certificate.passed, "{}", p.certificate);
        let out = springer_descend(&q, &p.point).unwrap();
        prop_assert!(out.certificate.passed, "{}", out.certificate);
        prop_assert!(q.eval(&out.point).unwrap().is_zero());
        let ints: Vec<BigInt> = out.point.iter().map(|x| {
            let r = x.as_rational().expect("rational output");
            assert!(r.is_integer());
            r.to_integer()
        }).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        prop_assert!(g.is_one());
        prop_assert!(ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive()));
    }
}
