use std::sync::Arc;

use g2rat_core::arith::{ExtField, FieldElement, FieldKind, Scalar, UniPoly};
use g2rat_core::cert::Certificate;
use g2rat_core::exec::Exec;
use g2rat_core::g2::{
    certify_chain_equivariance, certify_induced_action, certify_weyl, generic_freeness_certificate, mismatched_equivariance, prop1_differential_check,
    rational_cartan, regular_cartan_mod_p, search_weyl_candidates, symbolic_cartan, weyl_invariants_on_cartan, CartanElement, DIM,
};
use g2rat_core::geom::chain::cremona_factor;
use g2rat_core::geom::{check_birational_pair, check_well_defined, compose, maps_agree, quotient_generators_check, RationalMapDescriptor, VarietyDescriptor};
use g2rat_core::mpoly::{MultiPoly, PolyRing, RationalFunction};
use g2rat_core::quadform::{
    branch_two_instance, degree3_point, is_smooth_quadric, isotropic_vectors, lambda4_form, search_branch_two_instance, split_congruence,
    springer_descend, stereographic_param, twist_form, DescentBranch, PlantedInstance, QuadraticForm, TwistData,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::context::Context;

pub type CheckResult = Result<Certificate, String>;

fn s<E: ToString>(e: E) -> String {
    e.to_string()
}

fn show(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

// torus and Weyl group

pub fn weights(ctx: &Context) -> CheckResult {
    let mut c = Certificate::new("weights");
    let t = &ctx.table;
    let shown: Vec<String> = (1..=7).map(|i| format!("X{i}:({},{})", t.weight(i)[0], t.weight(i)[1])).collect();
    c.record(shown.join(" "));
    c.require(t.relations_hold(), "w7 = -w1, w6 = -w2, w5 = -w3, w3 = w1 - w2, w4 = 0", "weight relations fail");
    Ok(c)
}

pub fn weyl_group(ctx: &Context) -> CheckResult {
    Ok(certify_weyl(ctx.group()?, &ctx.table))
}

pub fn induced_action(ctx: &Context) -> CheckResult {
    certify_induced_action(ctx.group()?).map_err(s)
}

pub fn weyl_search_strategies(ctx: &Context) -> CheckResult {
    let mut c = Certificate::new("search strategies");
    let seq = search_weyl_candidates(&ctx.table, Exec::Sequential);
    let par = search_weyl_candidates(&ctx.table, Exec::Parallel);
    c.require(seq == par, format!("sequential and parallel searches both find {} elements", seq.len()), "strategies disagree");
    Ok(c)
}

// quotient

pub fn quotient_generators(ctx: &Context) -> CheckResult {
    quotient_generators_check(ctx.quotient()?).map_err(s)
}

fn chart_monomial(ctx: &Context, text: &str) -> Result<RationalFunction, String> {
    let ring = ctx.quotient()?.chart.ring().clone();
    Ok(RationalFunction::from_poly(MultiPoly::parse(&ring, text).map_err(s)?))
}

pub fn quotient_squared_generator(ctx: &Context) -> CheckResult {
    let mut data = ctx.quotient()?.clone();
    data.invariants[3].1 = chart_monomial(ctx, "x1^2*x5^2*x6^2")?;
    data.invariants.truncate(4);
    quotient_generators_check(&data).map_err(s)
}

pub fn quotient_missing_generators(ctx: &Context) -> CheckResult {
    let mut data = ctx.quotient()?.clone();
    data.invariants.truncate(3);
    quotient_generators_check(&data).map_err(s)
}

pub fn quotient_non_invariant(ctx: &Context) -> CheckResult {
    let mut data = ctx.quotient()?.clone();
    data.invariants.push(("x1".into(), chart_monomial(ctx, "x1")?));
    quotient_generators_check(&data).map_err(s)
}

// chain

pub fn quotient_map_well_defined(ctx: &Context) -> CheckResult {
    check_well_defined(&ctx.chain()?.quotient).map_err(s)
}

pub fn link_well_defined(ctx: &Context, k: usize) -> CheckResult {
    let chain = ctx.chain()?;
    let link = &chain.links()[k];
    let mut c = Certificate::new(link.name);
    c.absorb(check_well_defined(link.forward).map_err(s)?);
    c.absorb(check_well_defined(link.backward).map_err(s)?);
    Ok(c)
}

pub fn link_birational(ctx: &Context, k: usize) -> CheckResult {
    let chain = ctx.chain()?;
    let link = &chain.links()[k];
    let mut c = Certificate::new(link.name);
    c.absorb(check_birational_pair(link.forward, link.backward).map_err(s)?);
    c.absorb(check_birational_pair(link.backward, link.forward).map_err(s)?);
    Ok(c)
}

/// Both composites of the Cremona maps are `P^3` times the identity.
pub fn cremona_involution(ctx: &Context) -> CheckResult {
    let chain = ctx.chain()?;
    let mut c = Certificate::new("cremona involution");
    for (first, second, v) in [(&chain.cremona_34, &chain.cremona_43, &chain.lambda3), (&chain.cremona_43, &chain.cremona_34, &chain.lambda4)] {
        let cc = compose(first, second).map_err(s)?;
        let p3 = cremona_factor(v).map_err(s)?.pow(3);
        let exact = cc.coords().iter().enumerate().all(|(i, coord)| coord.num() == &(&p3 * &MultiPoly::var(v.ring(), i)) && coord.den().is_one());
        c.require(exact, format!("{}.{} = (Y1 Y2 Y3 Z1 Z2)^3 * id on {}", second.name(), first.name(), v.name()), format!("composite on {} is not P^3 * id", v.name()));
        let id = RationalMapDescriptor::identity(v);
        c.absorb(maps_agree(v, true, cc.coords(), id.coords(), "C.C ~ id").map_err(s)?);
    }
    Ok(c)
}

pub fn chain_equivariance(ctx: &Context) -> CheckResult {
    certify_chain_equivariance(ctx.chain()?, ctx.group()?).map_err(s)
}

pub fn forgetful_projection(ctx: &Context) -> CheckResult {
    let chain = ctx.chain()?;
    let l3 = &chain.lambda3;
    let r = PolyRing::new(&["Y1", "Y2", "Y3", "Z1"], FieldKind::Rational);
    let p3 = Arc::new(VarietyDescriptor::projective("P3", &r, vec![]).map_err(s)?);
    let parse = |ring, text: &str| MultiPoly::parse(ring, text).map_err(s);
    let forget = RationalMapDescriptor::from_polys(
        "forget-Z2",
        l3,
        &p3,
        ["Y1", "Y2", "Y3", "Z1"].iter().map(|t| parse(l3.ring(), t)).collect::<Result<_, _>>()?,
    )
    .map_err(s)?;
    let back =
        RationalMapDescriptor::from_polys("repeat-Z1", &p3, l3, ["Y1", "Y2", "Y3", "Z1", "Z1"].iter().map(|t| parse(&r, t)).collect::<Result<_, _>>()?)
            .map_err(s)?;
    check_birational_pair(&forget, &back).map_err(s)
}

pub fn mismatched_action(ctx: &Context) -> CheckResult {
    mismatched_equivariance(&ctx.chain()?.cremona_34, &[1, 2, 0, 3, 4], &[2, 0, 1, 3, 4]).map_err(s)
}

// smoothness

pub fn lambda4_smooth(field: &FieldKind) -> CheckResult {
    let q = lambda4_form(field);
    let out = is_smooth_quadric(&q).map_err(s)?;
    let mut c = out.certificate;
    c.record(format!("branch {}", out.branch));
    Ok(c)
}

pub fn lambda4_smooth_mod(p: u64) -> CheckResult {
    lambda4_smooth(&FieldKind::prime(p).map_err(s)?)
}

pub fn degenerate_quadric() -> CheckResult {
    let f2 = FieldKind::prime(2).map_err(s)?;
    let ring = PolyRing::new(&["X1", "X2", "X3"], f2);
    let q = QuadraticForm::from_poly(&MultiPoly::parse(&ring, "X1*X2").map_err(s)?).map_err(s)?;
    Ok(is_smooth_quadric(&q).map_err(s)?.certificate)
}

// adjoint differential

pub fn jacobi(ctx: &Context) -> CheckResult {
    let alg = ctx.algebra()?;
    let mut c = Certificate::new("Chevalley basis");
    c.record(format!("{} structure constants N(r,s)", alg.n.len()));
    c.require(alg.is_antisymmetric(), "bracket antisymmetric on the basis", "bracket not antisymmetric");
    let bad = alg.jacobi_violation(ctx.exec);
    c.require(bad.is_none(), format!("Jacobi identity on all {} basis triples", DIM * DIM * DIM), format!("Jacobi fails at {bad:?}"));
    Ok(c)
}

pub fn prop1_generic(ctx: &Context) -> CheckResult {
    prop1_differential_check(ctx.algebra()?, &symbolic_cartan(), "QQ(a,b)").map_err(s)
}

pub fn prop1_rational(ctx: &Context) -> CheckResult {
    prop1_differential_check(ctx.algebra()?, &rational_cartan(1, 1), "QQ").map_err(s)
}

pub fn prop1_mod(ctx: &Context, p: u64) -> CheckResult {
    let alg = ctx.algebra()?;
    let (k, x) = regular_cartan_mod_p(alg, p).map_err(s)?;
    let mut c = prop1_differential_check(alg, &x, &k.to_string()).map_err(s)?;
    c.record(format!("x = ({}, {})", x.a, x.b));
    Ok(c)
}

/// `x = (1, 1)` over `GF(5)` is killed by `3a + 2b`; the rejection is the expected failure.
pub fn prop1_irregular(ctx: &Context) -> CheckResult {
    let f5 = FieldKind::prime(5).map_err(s)?;
    match prop1_differential_check(ctx.algebra()?, &CartanElement::new(f5.one(), f5.one()), "GF(5)") {
        Ok(c) => Ok(c),
        Err(e) => Ok(Certificate::failed("differential over GF(5)", e.to_string())),
    }
}

// freeness and invariants

pub fn freeness(ctx: &Context) -> CheckResult {
    Ok(generic_freeness_certificate(&ctx.table.chart_matrix()))
}

pub fn freeness_doubled(ctx: &Context) -> CheckResult {
    let cols: Vec<Vec<i64>> = g2rat_core::g2::WeightTable::chart_indices().iter().map(|&i| ctx.table.weight(i).iter().map(|w| 2 * w).collect()).collect();
    Ok(generic_freeness_certificate(&g2rat_core::arith::IntMatrix::from_cols(&cols)))
}

pub fn reynolds(ctx: &Context) -> CheckResult {
    weyl_invariants_on_cartan(ctx.group()?, &FieldKind::Rational).map(|(_, c)| c).map_err(s)
}

// twisting and descent

pub fn split_twist(_: &Context) -> CheckResult {
    let mut c = Certificate::new("split twist");
    let q = twist_form(&TwistData::split());
    c.require(q == lambda4_form(&FieldKind::Rational), "twist of the split torsor equals the coefficient matrix of Lambda4", format!("split twist is {q}"));
    Ok(c)
}

fn twisted_ring() -> g2rat_core::mpoly::Ring {
    PolyRing::new(&["a", "b", "c", "u", "v"], FieldKind::Rational)
}

pub fn twisted_smooth(ctx: &Context) -> CheckResult {
    let q = twist_form(&ctx.twist);
    let out = is_smooth_quadric(&q).map_err(s)?;
    let mut c = Certificate::new(format!("twisted quadric for {}", ctx.twist));
    c.record(format!("q = {}", q.to_poly(&twisted_ring()).map_err(s)?));
    c.absorb(out.certificate);
    Ok(c)
}

pub fn congruence(ctx: &Context) -> CheckResult {
    split_congruence(&ctx.twist).map_err(s)
}

pub fn degree3(ctx: &Context) -> CheckResult {
    Ok(degree3_point(&ctx.twist).map_err(s)?.certificate)
}

fn descended(twist: &TwistData) -> Result<(QuadraticForm, Vec<Scalar>, Certificate), String> {
    let q = twist_form(twist);
    let p = degree3_point(twist).map_err(s)?;
    let out = springer_descend(&q, &p.point).map_err(s)?;
    Ok((q, out.point, out.certificate))
}

pub fn springer(ctx: &Context) -> CheckResult {
    let (q, point, mut c) = descended(&ctx.twist)?;
    c.require(!point.iter().all(Scalar::is_zero), "output nonzero", "output is zero");
    let v = q.eval(&point).map_err(s)?;
    c.require(v.is_zero(), format!("q{} = 0 rechecked", show(&point)), format!("q = {v}"));
    Ok(c)
}

pub fn stereographic_twisted(ctx: &Context) -> CheckResult {
    let (q, point, _) = descended(&ctx.twist)?;
    let mut c = stereographic_param(&q, &point, &twisted_ring()).map_err(s)?.certificate;
    c.record(format!("base point {}", show(&point)));
    Ok(c)
}

pub fn stereographic_split(_: &Context) -> CheckResult {
    let ring = PolyRing::new(&["Y1", "Y2", "Y3", "Z1", "Z2"], FieldKind::Rational);
    let p: Vec<Scalar> = [1, 0, 0, 0, 0].iter().map(|&x| Scalar::from(x)).collect();
    Ok(stereographic_param(&lambda4_form(&FieldKind::Rational), &p, &ring).map_err(s)?.certificate)
}

pub fn stereographic_circle(_: &Context) -> CheckResult {
    let ring = PolyRing::new(&["X", "Y", "Z"], FieldKind::Rational);
    let q = QuadraticForm::from_poly(&MultiPoly::parse(&ring, "X^2 + Y^2 - Z^2").map_err(s)?).map_err(s)?;
    let p: Vec<Scalar> = [1, 0, 1].iter().map(|&x| Scalar::from(x)).collect();
    Ok(stereographic_param(&q, &p, &ring).map_err(s)?.certificate)
}

/// The planted instance is rediscovered by the search, descends through the
/// cofactor branch, and its output appears among the brute-force zeros.
pub fn branch_two(ctx: &Context) -> CheckResult {
    let inst = branch_two_instance();
    let mut c = Certificate::new("cofactor branch");
    let found = search_branch_two_instance(&inst.diagonal, [-2, 0, 0, 1], 1, ctx.exec);
    c.require(found.as_ref() == Some(&inst), "planted instance is the first hit of the height-1 search", "search does not reproduce the planted instance");
    let out = springer_descend(&inst.form(), &inst.point().map_err(s)?).map_err(s)?;
    c.absorb(out.certificate);
    c.require(out.branch == DescentBranch::Cofactor, "descent took branch (ii)", format!("descent took branch {}", out.branch));
    let ints: Vec<i64> = out.point.iter().map(|x| x.to_string().parse::<i64>()).collect::<Result<_, _>>().map_err(s)?;
    let h = ints.iter().map(|x| x.abs()).max().unwrap_or(0);
    let zeros = isotropic_vectors(&inst.form(), h, ctx.exec);
    c.require(
        zeros.contains(&ints),
        format!("oracle: {:?} is among the {} primitive zeros of height <= {h}", ints, zeros.len()),
        format!("oracle does not list {ints:?}"),
    );
    Ok(c)
}

/// A point with `q != 0` must be rejected before descent starts.
pub fn off_quadric(_: &Context) -> CheckResult {
    let inst = PlantedInstance { diagonal: vec![1, 1, 1, 1, 1], cubic: vec![-2, 0, 0, 1], coords: vec![[1, 0, 0]; 5] };
    match springer_descend(&inst.form(), &inst.point().map_err(s)?) {
        Ok(out) => Ok(out.certificate),
        Err(e) => Ok(Certificate::failed("Springer descent", e.to_string())),
    }
}

// seeded properties

const SAMPLES: usize = 200;

fn rng(ctx: &Context, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(ctx.config.seed ^ salt)
}

fn random_scalar(rng: &mut ChaCha8Rng, k: &FieldKind) -> Scalar {
    match k {
        FieldKind::Rational => Scalar::ratio(rng.random_range(-50..=50), rng.random_range(1..=20)),
        FieldKind::Prime(p) => k.from_i64(rng.random_range(0..*p as i64)),
        FieldKind::Extension(_) => {
            let t = k.generator().expect("generator");
            let base_p = k.characteristic().max(7) as i64;
            &k.from_i64(rng.random_range(0..base_p)) + &(&k.from_i64(rng.random_range(0..base_p)) * &t)
        }
    }
}

pub fn field_axioms(ctx: &Context) -> CheckResult {
    let mut rng = rng(ctx, 0xa11);
    let f3 = FieldKind::prime(3).map_err(s)?;
    let gf9 = FieldKind::Extension(ExtField::new(&UniPoly::from_i64(f3, &[1, 0, 1]), "t").map_err(s)?);
    let fields = [FieldKind::Rational, FieldKind::prime(97).map_err(s)?, gf9];
    let mut c = Certificate::new("field axioms");
    for k in &fields {
        let mut ok = true;
        for _ in 0..SAMPLES {
            let (a, b, d) = (random_scalar(&mut rng, k), random_scalar(&mut rng, k), random_scalar(&mut rng, k));
            ok &= a.plus(&b).plus(&d) == a.plus(&b.plus(&d));
            ok &= a.times(&b.plus(&d)) == a.times(&b).plus(&a.times(&d));
            ok &= a.times(&b) == b.times(&a);
            ok &= a.is_zero() || a.try_inv().is_ok_and(|i| a.times(&i).is_one());
        }
        c.require(ok, format!("{SAMPLES} samples over {k}"), format!("axiom violated over {k}"));
    }
    Ok(c)
}

pub fn bilinearization(ctx: &Context) -> CheckResult {
    let mut rng = rng(ctx, 0xb11);
    let mut c = Certificate::new("bilinearization");
    for k in [FieldKind::Rational, FieldKind::prime(2).map_err(s)?] {
        let mut ok = true;
        for _ in 0..SAMPLES / 10 {
            let table: Vec<Vec<Scalar>> = (0..4).map(|_| (0..4).map(|_| Scalar::from(rng.random_range(-5..=5))).collect()).collect();
            let q = QuadraticForm::from_table(&k, &table).map_err(s)?;
            let b = q.bilinearize();
            for _ in 0..10 {
                let x: Vec<Scalar> = (0..4).map(|_| random_scalar(&mut rng, &k)).collect();
                let y: Vec<Scalar> = (0..4).map(|_| random_scalar(&mut rng, &k)).collect();
                let by = b.mul_vec(&y);
                let xby = x.iter().zip(&by).fold(k.zero(), |acc, (u, v)| acc.plus(&u.times(v)));
                ok &= q.polar(&x, &y).map_err(s)? == xby;
            }
        }
        c.require(ok, format!("q(x+y) - q(x) - q(y) = x B y on {} samples over {k}", SAMPLES), format!("identity fails over {k}"));
    }
    Ok(c)
}

pub fn ad_homomorphism(ctx: &Context) -> CheckResult {
    let alg = ctx.algebra()?;
    let mut rng = rng(ctx, 0xad1);
    let mut c = Certificate::new("ad homomorphism");
    let mut vec = || {
        let mut v = [0i64; DIM];
        for x in &mut v {
            *x = rng.random_range(-3..=3);
        }
        v
    };
    let mut ok = true;
    for _ in 0..SAMPLES {
        let (u, v, w) = (vec(), vec(), vec());
        let lhs = alg.bracket(&alg.bracket(&u, &v), &w);
        let a = alg.bracket(&u, &alg.bracket(&v, &w));
        let b = alg.bracket(&v, &alg.bracket(&u, &w));
        ok &= (0..DIM).all(|i| lhs[i] == a[i] - b[i]);
    }
    c.require(ok, format!("ad[u,v] = [ad u, ad v] on {SAMPLES} random integer triples"), "ad is not a homomorphism");
    Ok(c)
}
