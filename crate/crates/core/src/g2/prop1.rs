use super::chevalley::{root_name, ChevalleyAlgebra, Root, DIM, H_ALPHA, H_BETA};
use super::G2Error;
use crate::arith::{ExtField, FieldElement, FieldKind, Matrix, Scalar, UniPoly};
use crate::cert::Certificate;
use crate::mpoly::{PolyRing, RationalFunction};

/// `n * 1` in the field of `one`.
pub fn from_int<F: FieldElement>(one: &F, n: i64) -> F {
    let mut acc = one.zero_like();
    let mut base = if n < 0 { one.negated() } else { one.clone() };
    let mut k = n.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.plus(&base);
        }
        base = base.plus(&base);
        k >>= 1;
    }
    acc
}

/// `x` in the Cartan subalgebra with `alpha(x) = a`, `beta(x) = b`.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanElement<F> {
    pub a: F,
    pub b: F,
}

impl<F: FieldElement> CartanElement<F> {
    pub fn new(a: F, b: F) -> Self {
        CartanElement { a, b }
    }

    pub fn root_value(&self, r: Root) -> F {
        from_int(&self.a.one_like(), r[0]).times(&self.a).plus(&from_int(&self.a.one_like(), r[1]).times(&self.b))
    }

    /// Coordinates in `h_alpha, h_beta`: `(2a + b, 3a + 2b)`.
    pub fn h_coords(&self) -> [F; 2] {
        let one = self.a.one_like();
        [
            from_int(&one, 2).times(&self.a).plus(&self.b),
            from_int(&one, 3).times(&self.a).plus(&from_int(&one, 2).times(&self.b)),
        ]
    }

    /// First root vanishing at `x`, if any.
    pub fn vanishing_root(&self, alg: &ChevalleyAlgebra) -> Option<Root> {
        alg.roots.iter().copied().find(|&r| self.root_value(r).is_zero())
    }

    pub fn ad_matrix(&self, alg: &ChevalleyAlgebra) -> Matrix<F> {
        let one = self.a.one_like();
        let [ca, cb] = self.h_coords();
        let (ma, mb) = (alg.ad_basis(H_ALPHA), alg.ad_basis(H_BETA));
        let rows = (0..DIM)
            .map(|i| (0..DIM).map(|j| ca.times(&from_int(&one, ma[i][j])).plus(&cb.times(&from_int(&one, mb[i][j])))).collect())
            .collect();
        Matrix::from_rows(rows, &one)
    }
}

/// Rank of `ad x`, and `[x, g] + t = g`, `[x, g] ∩ t = 0` for regular `x`.
pub fn prop1_differential_check<F: FieldElement>(alg: &ChevalleyAlgebra, x: &CartanElement<F>, field: &str) -> Result<Certificate, G2Error> {
    if let Some(r) = x.vanishing_root(alg) {
        return Err(G2Error::NotRegular { root: root_name(r), field: field.to_string() });
    }
    let mut cert = Certificate::new(format!("differential over {field}"));
    cert.record("all 12 root values nonzero");
    let one = x.a.one_like();
    let ad = x.ad_matrix(alg);
    let rank = ad.rank();
    cert.require(rank == 12, "rank ad(x) = 12", format!("rank ad(x) = {rank}"));

    let mut t = Matrix::zeros(DIM, 2, &one);
    t.set(H_ALPHA, 0, one.clone());
    t.set(H_BETA, 1, one.clone());
    let sum_rank = ad.hconcat(&t).rank();
    cert.require(sum_rank == DIM, "[x,g] + t = g (rank of [ad x | t] is 14)", format!("rank of [ad x | t] is {sum_rank}"));

    let minus_t = t.map(&one, FieldElement::negated);
    let kernel = ad.hconcat(&minus_t).kernel();
    let tails: Vec<Vec<F>> = kernel.iter().map(|v| v[DIM..].to_vec()).collect();
    let inter = if tails.is_empty() { 0 } else { Matrix::from_rows(tails, &one).rank() };
    cert.require(inter == 0, "[x,g] ∩ t = 0", format!("[x,g] ∩ t has dimension {inter}"));
    cert.require(rank + 2 == DIM, "dim [x,g] + dim t = dim g", "dimension count fails");
    Ok(cert)
}

pub fn rational_cartan(a: i64, b: i64) -> CartanElement<Scalar> {
    CartanElement::new(Scalar::from(a), Scalar::from(b))
}

/// The generic element `x = (a, b)` over `QQ(a, b)`.
pub fn symbolic_cartan() -> CartanElement<RationalFunction> {
    let ring = PolyRing::new(&["a", "b"], FieldKind::Rational);
    CartanElement::new(RationalFunction::var(&ring, 0), RationalFunction::var(&ring, 1))
}

/// A regular element over `GF(p)` of the form `(1, c)`, or over `GF(p^2)`
/// as `(1, t)` when `GF(p)` has none (every line through 0 is a root kernel).
pub fn regular_cartan_mod_p(alg: &ChevalleyAlgebra, p: u64) -> Result<(FieldKind, CartanElement<Scalar>), G2Error> {
    let fp = FieldKind::prime(p)?;
    for c in 0..p as i64 {
        let x = CartanElement::new(fp.one(), fp.from_i64(c));
        if x.vanishing_root(alg).is_none() {
            return Ok((fp, x));
        }
    }
    let modulus = if p == 2 {
        UniPoly::from_i64(fp.clone(), &[1, 1, 1])
    } else {
        let n = (2..p as i64).find(|&n| (1..p as i64).all(|y| (y * y - n).rem_euclid(p as i64) != 0)).expect("nonresidue exists");
        UniPoly::from_i64(fp.clone(), &[-n, 0, 1])
    };
    let k = FieldKind::Extension(ExtField::new(&modulus, "t")?);
    let x = CartanElement::new(k.one(), k.generator().expect("extension generator"));
    match x.vanishing_root(alg) {
        None => Ok((k, x)),
        Some(r) => Err(G2Error::NotRegular { root: root_name(r), field: k.to_string() }),
    }
}
