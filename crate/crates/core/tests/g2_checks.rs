use g2rat_core::arith::{FieldElement, FieldKind, Matrix, Scalar};
use g2rat_core::exec::Exec;
use g2rat_core::g2::*;
use g2rat_core::geom::chain::LambdaChain;
use g2rat_core::mpoly::{Monomial, MultiPoly};

fn group() -> WeylGroup {
    synthesize_weyl_group(&build_weight_table(), Exec::default()).unwrap()
}

#[test]
fn weyl_group_certified() {
    let g = group();
    let cert = certify_weyl(&g, &build_weight_table());
    assert!(cert.passed, "{cert}");
    assert_eq!(g.order(), 12);
}

#[test]
fn induced_action_is_s3_times_s2() {
    let cert = certify_induced_action(&group()).unwrap();
    assert!(cert.passed, "{cert}");
}

#[test]
fn chevalley_algebra_satisfies_jacobi() {
    let seq = build_chevalley_algebra(Exec::Sequential).unwrap();
    let par = build_chevalley_algebra(Exec::Parallel).unwrap();
    assert_eq!(seq.n, par.n);
    assert!(seq.is_antisymmetric());
    assert_eq!(seq.jacobi_violation(Exec::Sequential), None);
}

#[test]
fn prop1_holds_generically_and_mod_p() {
    let alg = build_chevalley_algebra(Exec::default()).unwrap();
    let cert = prop1_differential_check(&alg, &symbolic_cartan(), "Q(a,b)").unwrap();
    assert!(cert.passed, "{cert}");
    let cert = prop1_differential_check(&alg, &rational_cartan(1, 1), "Q").unwrap();
    assert!(cert.passed, "{cert}");
    for p in [2, 3, 5, 7, 11] {
        let (k, x) = regular_cartan_mod_p(&alg, p).unwrap();
        let cert = prop1_differential_check(&alg, &x, &k.to_string()).unwrap();
        assert!(cert.passed, "p = {p}: {cert}");
    }
}

#[test]
fn small_primes_need_quadratic_extension() {
    let alg = build_chevalley_algebra(Exec::default()).unwrap();
    for p in [2, 3, 5] {
        let (k, _) = regular_cartan_mod_p(&alg, p).unwrap();
        assert!(matches!(k, FieldKind::Extension(_)), "p = {p}");
    }
    for p in [7, 11] {
        let (k, _) = regular_cartan_mod_p(&alg, p).unwrap();
        assert_eq!(k, FieldKind::prime(p).unwrap());
    }
}

#[test]
fn irregular_elements_are_rejected() {
    let alg = build_chevalley_algebra(Exec::default()).unwrap();
    let f5 = FieldKind::prime(5).unwrap();
    let x = CartanElement::new(f5.one(), f5.one());
    match prop1_differential_check(&alg, &x, "GF(5)") {
        Err(G2Error::NotRegular { root, .. }) => assert!(root.contains("3a+2b"), "{root}"),
        other => panic!("{other:?}"),
    }
    match prop1_differential_check(&alg, &rational_cartan(1, 0), "Q") {
        Err(G2Error::NotRegular { root, .. }) => assert!(root.ends_with('b'), "{root}"),
        other => panic!("{other:?}"),
    }
}

// det(t I - ad x) = t^2 prod_r (t - r(x)), evaluated at integer t
#[test]
fn characteristic_polynomial_matches_root_values() {
    let alg = build_chevalley_algebra(Exec::default()).unwrap();
    let x = rational_cartan(2, 5);
    let ad = x.ad_matrix(&alg);
    let one = Scalar::from(1);
    for t in [-3i64, 1, 4, 7] {
        let tt = Scalar::from(t);
        let lhs = Matrix::identity(DIM, &one).map(&one, |e| e.times(&tt)).sub(&ad).determinant();
        let rhs = alg.roots.iter().fold(tt.times(&tt), |acc, &r| acc.times(&tt.minus(&x.root_value(r))));
        assert_eq!(lhs, rhs, "t = {t}");
    }
}

#[test]
fn reynolds_invariants_match_root_oracle() {
    let g = group();
    let (inv, cert) = weyl_invariants_on_cartan(&g, &FieldKind::Rational).unwrap();
    assert!(cert.passed, "{cert}");
    let ring = inv.f2.ring().clone();
    // Roots in the character lattice with basis w1, w2: the short ones are
    // the nonzero weights, the long ones their pairwise sums. W permutes
    // them up to sign, so sum r^2 is an invariant of degree 2.
    let short_roots: [Root; 3] = [[1, 0], [0, 1], [1, -1]];
    let long_roots: [Root; 3] = [[1, 1], [2, -1], [-1, 2]];
    let a = MultiPoly::var(&ring, 0);
    let b = MultiPoly::var(&ring, 1);
    let value = |r: Root| &a.scale(&Scalar::from(r[0])) + &b.scale(&Scalar::from(r[1]));
    let oracle = short_roots.iter().chain(&long_roots).fold(MultiPoly::zero(&ring), |acc, &r| {
        let v = value(r);
        &acc + &(&v * &v)
    });
    assert!(is_invariant(&g, &oracle));
    let ratio = oracle.leading_coeff().unwrap().times(&inv.f2.leading_coeff().unwrap().try_inv().unwrap());
    assert_eq!(inv.f2.scale(&ratio), oracle);
    // the degree-6 invariants are spanned by f2^3 and the product of squared short roots
    let short = short_roots.iter().fold(MultiPoly::constant(&ring, Scalar::from(1)), |acc, &r| {
        let v = value(r);
        &acc * &(&v * &v)
    });
    assert!(is_invariant(&g, &short));
    let f2cubed = inv.f2.pow(3);
    let basis = [f2cubed, short, inv.f6.clone()];
    let mons: Vec<_> = (0..=6u32).collect();
    let rows: Vec<Vec<Scalar>> = basis.iter().map(|p| mons.iter().map(|&i| p.coeff(&Monomial::new(vec![i, 6 - i]))).collect()).collect();
    assert_eq!(Matrix::from_rows(rows, &Scalar::from(1)).rank(), 2);
}

#[test]
fn freeness_and_its_doubled_control() {
    let t = build_weight_table();
    let cert = generic_freeness_certificate(&t.chart_matrix());
    assert!(cert.passed, "{cert}");
    let doubled = g2rat_core::arith::IntMatrix::from_cols(
        &WeightTable::chart_indices().iter().map(|&i| t.weight(i).iter().map(|w| 2 * w).collect()).collect::<Vec<Vec<i64>>>(),
    );
    let cert = generic_freeness_certificate(&doubled);
    assert!(!cert.passed);
    assert!(cert.to_string().contains("mu_2 x mu_2"), "{cert}");
}

#[test]
fn chain_is_weyl_equivariant() {
    let chain = LambdaChain::build().unwrap();
    let cert = certify_chain_equivariance(&chain, &group()).unwrap();
    assert!(cert.passed, "{cert}");
}

#[test]
fn mismatched_actions_break_equivariance() {
    let chain = LambdaChain::build().unwrap();
    let c = [1, 2, 0, 3, 4];
    let c_inv = [2, 0, 1, 3, 4];
    let cert = mismatched_equivariance(&chain.cremona_34, &c, &c_inv).unwrap();
    assert!(!cert.passed);
    let cert = mismatched_equivariance(&chain.cremona_34, &c, &c).unwrap();
    assert!(cert.passed, "{cert}");
}
