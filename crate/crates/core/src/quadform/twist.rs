use std::fmt;

use num_integer::Integer;
use num_traits::One;

use super::{lambda4_form, QuadError, QuadraticForm};
use crate::arith::{etale_split_idempotent, mul_mod, BigInt, EtaleAlgebra, FieldKind, MonogenicAlgebra, Scalar, UniPoly};
use crate::cert::Certificate;
use crate::mpoly::{IdealBasis, MultiPoly, PolyRing};

/// A torsor under `S3 x S2`, given by its cubic and quadratic étale algebras.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistData {
    pub cubic: EtaleAlgebra,
    pub quadratic: EtaleAlgebra,
}

impl TwistData {
    pub fn new(cubic: EtaleAlgebra, quadratic: EtaleAlgebra) -> Result<Self, QuadError> {
        if cubic.degree() != 3 {
            return Err(QuadError::WrongDegree { what: "cubic algebra".into(), expected: 3, got: cubic.degree() });
        }
        if quadratic.degree() != 2 {
            return Err(QuadError::WrongDegree { what: "quadratic algebra".into(), expected: 2, got: quadratic.degree() });
        }
        Ok(TwistData { cubic, quadratic })
    }

    /// Monic integer polynomials, constant term first.
    pub fn from_coeffs(cubic: &[i64], quadratic: &[i64]) -> Result<Self, QuadError> {
        let f = UniPoly::from_i64(FieldKind::Rational, cubic);
        let g = UniPoly::from_i64(FieldKind::Rational, quadratic);
        if f.degree() != Some(3) {
            return Err(QuadError::WrongDegree { what: f.to_string(), expected: 3, got: f.degree().unwrap_or(0) });
        }
        if g.degree() != Some(2) {
            return Err(QuadError::WrongDegree { what: g.to_string(), expected: 2, got: g.degree().unwrap_or(0) });
        }
        Self::new(EtaleAlgebra::monogenic(f)?, EtaleAlgebra::monogenic(g)?)
    }

    pub fn split() -> Self {
        Self::new(EtaleAlgebra::split(3).expect("degree 3"), EtaleAlgebra::split(2).expect("degree 2")).expect("split degrees")
    }

    /// `x^3 - 2`, `x^2 - 5`.
    pub fn default_instance() -> Self {
        Self::from_coeffs(&[-2, 0, 0, 1], &[-5, 0, 1]).expect("static instance")
    }
}

impl fmt::Display for TwistData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |e: &EtaleAlgebra| e.factors().iter().map(|m| format!("({})", m.modulus())).collect::<Vec<_>>().join("x");
        write!(f, "{} ; {}", side(&self.cubic), side(&self.quadratic))
    }
}

fn trace(e: &EtaleAlgebra, a: &[Scalar]) -> Scalar {
    Scalar::Rational(e.trace_norm(a).0)
}

fn norm(e: &EtaleAlgebra, a: &[Scalar]) -> Scalar {
    Scalar::Rational(e.trace_norm(a).1)
}

/// `s2(y) + N(z)` on `E3 + E2` with the algebras' standard bases, where
/// `s2(y) = ((Tr y)^2 - Tr(y^2)) / 2`.
pub fn twist_form(z: &TwistData) -> QuadraticForm {
    let q = FieldKind::Rational;
    let mut form = QuadraticForm::zero(&q, 5);
    let b3 = z.cubic.basis();
    let half = Scalar::ratio(1, 2);
    for i in 0..3 {
        for j in i..3 {
            let tij = trace(&z.cubic, &z.cubic.mul(&b3[i], &b3[j]));
            let prod = &trace(&z.cubic, &b3[i]) * &trace(&z.cubic, &b3[j]);
            let c = if i == j { &(&prod - &tij) * &half } else { &prod - &tij };
            form.coeffs[i][j] = c;
        }
    }
    let b2 = z.quadratic.basis();
    for i in 0..2 {
        for j in i..2 {
            let c = if i == j {
                norm(&z.quadratic, &b2[i])
            } else {
                let sum: Vec<Scalar> = b2[i].iter().zip(&b2[j]).map(|(a, b)| a + b).collect();
                &(&norm(&z.quadratic, &sum) - &norm(&z.quadratic, &b2[i])) - &norm(&z.quadratic, &b2[j])
            };
            form.coeffs[3 + i][3 + j] = c;
        }
    }
    form
}

/// `q(P) = 0` over the field `K` containing the point's coordinates.
#[derive(Clone, Debug)]
pub struct Degree3Point {
    pub field: FieldKind,
    /// The idempotent before scaling, coordinates in the cubic algebra's basis.
    pub idempotent: Vec<Scalar>,
    pub point: Vec<Scalar>,
    pub certificate: Certificate,
}

fn rational_denominator(s: &Scalar) -> BigInt {
    match s.as_rational() {
        Some(q) => q.denom().clone(),
        None => s.as_ext().map_or_else(BigInt::one, |e| e.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(&rational_denominator(c)))),
    }
}

/// The point cut out by the idempotent of `E3 (x) K` at a root of the cubic,
/// scaled to clear rational denominators.
pub fn degree3_point(z: &TwistData) -> Result<Degree3Point, QuadError> {
    let form = twist_form(z);
    let mut cert = Certificate::new("degree-3 point");
    let factors = z.cubic.factors();
    let (field, idempotent) = if let Some(k) = factors.iter().position(|f| f.degree() == 1) {
        let start: usize = factors[..k].iter().map(MonogenicAlgebra::degree).sum();
        let mut e = vec![Scalar::from(0); 3];
        e[start] = Scalar::from(1);
        cert.record(format!("rational idempotent of factor {}", k + 1));
        (FieldKind::Rational, e)
    } else {
        let f = factors[0].modulus();
        let (field, theta) = match f.roots_in_base()?.first() {
            Some(r) => (FieldKind::Rational, r.clone()),
            None => {
                let k = FieldKind::Extension(factors[0].as_field("t")?);
                let t = k.generator().expect("extension generator");
                (k, t)
            }
        };
        let e = etale_split_idempotent(f, &theta)?;
        let sq = mul_mod(&e, &e, f)?;
        cert.require(sq == e, "e^2 = e", format!("e^2 - e = {}", &sq - &e));
        cert.record(format!("e = {e} over {field}"));
        (field.clone(), (0..3).map(|i| e.coeff(i)).collect())
    };
    let den = idempotent.iter().fold(BigInt::one(), |acc, c| acc.lcm(&rational_denominator(c)));
    let scale = field.from_bigint(&den);
    let mut point: Vec<Scalar> = idempotent.iter().map(|c| c * &scale).collect();
    point.extend([field.zero(), field.zero()]);
    let value = form.eval(&point)?;
    let shown: Vec<String> = point.iter().map(ToString::to_string).collect();
    cert.require(value.is_zero(), format!("q({}) = 0 over {field}", shown.join(", ")), format!("q = {value} at the idempotent point"));
    Ok(Degree3Point { field, idempotent, point, certificate: cert })
}

/// Elementary symmetric polynomials `e_0..e_d` of the given variables.
fn elementary(vars: &[MultiPoly]) -> Vec<MultiPoly> {
    let ring = vars[0].ring();
    let mut e = vec![MultiPoly::one(ring)];
    for r in vars {
        let mut next = e.clone();
        next.push(MultiPoly::zero(ring));
        for k in 1..next.len() {
            next[k] = &e.get(k).cloned().unwrap_or_else(|| MultiPoly::zero(ring)) + &(r * &e[k - 1]);
        }
        e = next;
    }
    e
}

/// Certifies that the twisted form becomes the split form over the universal
/// splitting algebra: with `Y = M y` the idempotent coordinates
/// (`M` block-Vandermonde in the roots), `q_split(M y) = q_twist(y)` modulo
/// the root relations, and `det(M)^2` reduces to a nonzero rational.
pub fn split_congruence(z: &TwistData) -> Result<Certificate, QuadError> {
    let mut cert = Certificate::new("congruent to the split form");
    let twisted = twist_form(z);
    let factors: Vec<&MonogenicAlgebra> = z.cubic.factors().iter().chain(z.quadratic.factors()).collect();
    let mut names = Vec::new();
    for (k, f) in factors.iter().enumerate() {
        let prefix = if k < z.cubic.factors().len() { "r" } else { "s" };
        for i in 0..f.degree() {
            names.push(format!("{prefix}{}_{}", k + 1, i + 1));
        }
    }
    let ring = PolyRing::new(&names, FieldKind::Rational);
    let vars = MultiPoly::vars(&ring);
    let mut relations = Vec::new();
    let mut m = vec![vec![MultiPoly::zero(&ring); 5]; 5];
    let mut vandermonde = MultiPoly::one(&ring);
    let mut start = 0;
    for f in &factors {
        let d = f.degree();
        let roots = &vars[start..start + d];
        let e = elementary(roots);
        for k in 1..=d {
            let c = f.modulus().coeff(d - k);
            let target = if k % 2 == 0 { c } else { -&c };
            relations.push(&e[k] - &MultiPoly::constant(&ring, target));
        }
        for i in 0..d {
            for j in 0..d {
                m[start + i][start + j] = roots[i].pow(j as u32);
            }
            for j in i + 1..d {
                vandermonde = &vandermonde * &(&roots[j] - &roots[i]);
            }
        }
        start += d;
    }
    let ideal = IdealBasis::new(&ring, relations);
    let pulled = lambda4_form(&FieldKind::Rational).pullback(&m)?;
    let mut agree = true;
    for k in 0..5 {
        for l in k..5 {
            let diff = &pulled[k][l] - &MultiPoly::constant(&ring, twisted.coeff(k, l).clone());
            let r = ideal.normal_form(&diff)?;
            if !r.is_zero() {
                agree = false;
                cert.fail(format!("coefficient ({},{}) differs by {r}", k + 1, l + 1));
            }
        }
    }
    if agree {
        cert.record("q_split(M y) = q_twist(y) modulo the root relations");
    }
    let disc = ideal.normal_form(&vandermonde.pow(2))?;
    match disc.constant_value() {
        Some(d) if !d.is_zero() => cert.record(format!("det(M)^2 = {d}")),
        _ => cert.fail(format!("det(M)^2 reduces to {disc}, not a nonzero constant")),
    }
    Ok(cert)
}
