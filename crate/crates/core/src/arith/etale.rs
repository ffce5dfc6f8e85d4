//! Étale algebras over `QQ`, presented as products of monogenic factors
//! `QQ[x]/(f)` with `f` monic and squarefree.
//!
//! Elements are flat coordinate vectors in the concatenation of the factors'
//! power bases. A split algebra `QQ^n` is `n` copies of `QQ[x]/(x)`, whose
//! basis is the primitive idempotents.

use std::sync::Arc;

use num_rational::BigRational;

use super::ext::ExtField;
use super::matrix::Matrix;
use super::scalar::{FieldKind, Scalar};
use super::upoly::{factor_small, UniPoly};
use super::ArithError;

/// Largest total degree accepted for an étale algebra.
pub const MAX_ETALE_DEGREE: usize = 6;

/// `QQ[x]/(f)` for a monic squarefree `f`; a field exactly when `f` is irreducible.
#[derive(Clone, Debug, PartialEq)]
pub struct MonogenicAlgebra {
    modulus: UniPoly,
}

impl MonogenicAlgebra {
    pub fn new(modulus: UniPoly) -> Result<Self, ArithError> {
        if modulus.field() != &FieldKind::Rational {
            return Err(ArithError::FieldMismatch { left: "QQ".into(), right: modulus.field().to_string() });
        }
        let degree = modulus.degree().ok_or(ArithError::NotMonic)?;
        if degree == 0 || !modulus.leading().is_one() {
            return Err(ArithError::NotMonic);
        }
        if degree > MAX_ETALE_DEGREE {
            return Err(ArithError::UnsupportedDegree { degree, max: MAX_ETALE_DEGREE });
        }
        if !modulus.is_squarefree() {
            return Err(ArithError::NotSquarefree(modulus.to_string()));
        }
        Ok(MonogenicAlgebra { modulus })
    }

    /// The factor `QQ = QQ[x]/(x)`.
    pub fn rationals() -> Self {
        MonogenicAlgebra { modulus: UniPoly::x(FieldKind::Rational) }
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("nonzero modulus")
    }

    /// Reduces a polynomial into power-basis coordinates.
    pub fn reduce(&self, p: &UniPoly) -> Vec<Scalar> {
        let r = p.rem(&self.modulus).expect("nonzero modulus");
        (0..self.degree()).map(|i| r.coeff(i)).collect()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let pa = UniPoly::new(FieldKind::Rational, a.to_vec());
        let pb = UniPoly::new(FieldKind::Rational, b.to_vec());
        self.reduce(&(&pa * &pb))
    }

    /// Matrix of multiplication by `a` in the power basis (column `j` is `a * x^j`).
    pub fn regular_matrix(&self, a: &[Scalar]) -> Matrix<Scalar> {
        let pa = UniPoly::new(FieldKind::Rational, a.to_vec());
        let cols = (0..self.degree())
            .map(|j| {
                let mut xj = vec![Scalar::from(0); j + 1];
                xj[j] = Scalar::from(1);
                self.reduce(&(&pa * &UniPoly::new(FieldKind::Rational, xj)))
            })
            .collect();
        Matrix::from_cols(cols, self.degree(), &Scalar::from(1))
    }

    /// Certified irreducibility (degree at most 3).
    pub fn is_field(&self) -> Result<bool, ArithError> {
        let f = factor_small(&self.modulus)?;
        Ok(f.len() == 1 && f[0].1 == 1)
    }

    /// The number field this factor is, when it is one.
    pub fn as_field(&self, name: &str) -> Result<Arc<ExtField>, ArithError> {
        ExtField::new(&self.modulus, name)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EtaleAlgebra {
    factors: Vec<MonogenicAlgebra>,
}

impl EtaleAlgebra {
    pub fn new(factors: Vec<MonogenicAlgebra>) -> Result<Self, ArithError> {
        let degree: usize = factors.iter().map(MonogenicAlgebra::degree).sum();
        if degree > MAX_ETALE_DEGREE {
            return Err(ArithError::UnsupportedDegree { degree, max: MAX_ETALE_DEGREE });
        }
        Ok(EtaleAlgebra { factors })
    }

    /// `QQ^n` with the idempotent basis.
    pub fn split(n: usize) -> Result<Self, ArithError> {
        Self::new(vec![MonogenicAlgebra::rationals(); n])
    }

    /// The single factor `QQ[x]/(f)` with its power basis.
    pub fn monogenic(f: UniPoly) -> Result<Self, ArithError> {
        Self::new(vec![MonogenicAlgebra::new(f)?])
    }

    pub fn factors(&self) -> &[MonogenicAlgebra] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(MonogenicAlgebra::degree).sum()
    }

    fn split_coords<'a>(&self, a: &'a [Scalar]) -> Vec<&'a [Scalar]> {
        assert_eq!(a.len(), self.degree(), "coordinate length");
        let mut out = Vec::with_capacity(self.factors.len());
        let mut start = 0;
        for f in &self.factors {
            out.push(&a[start..start + f.degree()]);
            start += f.degree();
        }
        out
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.factors
            .iter()
            .flat_map(|f| (0..f.degree()).map(|i| Scalar::from(i64::from(i == 0))))
            .collect()
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        (0..self.degree())
            .map(|i| (0..self.degree()).map(|j| Scalar::from(i64::from(i == j))).collect())
            .collect()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.split_coords(a)
            .into_iter()
            .zip(self.split_coords(b))
            .zip(&self.factors)
            .flat_map(|((x, y), f)| f.mul(x, y))
            .collect()
    }

    /// Block-diagonal regular representation.
    pub fn regular_matrix(&self, a: &[Scalar]) -> Matrix<Scalar> {
        let n = self.degree();
        let mut m = Matrix::zeros(n, n, &Scalar::from(1));
        let mut start = 0;
        for (part, f) in self.split_coords(a).into_iter().zip(&self.factors) {
            let block = f.regular_matrix(part);
            for i in 0..f.degree() {
                for j in 0..f.degree() {
                    m.set(start + i, start + j, block.get(i, j).clone());
                }
            }
            start += f.degree();
        }
        m
    }

    /// Trace and norm of `a` (trace and determinant of multiplication by `a`).
    pub fn trace_norm(&self, a: &[Scalar]) -> (BigRational, BigRational) {
        let m = self.regular_matrix(a);
        let t = m.trace().as_rational().expect("rational").clone();
        let n = m.determinant().as_rational().expect("rational").clone();
        (t, n)
    }

    /// `Tr(b_i b_j)` over the standard basis.
    pub fn trace_form(&self) -> Matrix<Scalar> {
        let basis = self.basis();
        let rows = basis
            .iter()
            .map(|bi| basis.iter().map(|bj| Scalar::Rational(self.trace_norm(&self.mul(bi, bj)).0)).collect())
            .collect();
        Matrix::from_rows(rows, &Scalar::from(1))
    }
}

/// Trace and norm of an element of an étale algebra over `QQ`.
pub fn nf_trace_norm(algebra: &EtaleAlgebra, a: &[Scalar]) -> (BigRational, BigRational) {
    algebra.trace_norm(a)
}

/// For `f` squarefree over `QQ` and a root `theta` of `f` in a field `K`,
/// returns the idempotent `e = g(x)/g(theta)` of `K[x]/(f)`, where
/// `f = (x - theta) g`. The result is a polynomial over `K` of degree below
/// `deg f`, i.e. coordinates in the basis `1, x, x^2, ...`.
pub fn etale_split_idempotent(f: &UniPoly, theta: &Scalar) -> Result<UniPoly, ArithError> {
    let k = theta.field();
    if !f.is_squarefree() {
        return Err(ArithError::NotSquarefree(f.to_string()));
    }
    let fk = f.embed(&k)?;
    if !fk.eval(theta).is_zero() {
        return Err(ArithError::InvalidRoot);
    }
    let (g, rem) = fk.div_rem(&UniPoly::linear_root(theta))?;
    debug_assert!(rem.is_zero());
    let gt = g.eval(theta);
    Ok(g.scale(&gt.checked_inv()?))
}

/// Multiplies two polynomials over `K` modulo `f` (embedded in `K`).
pub fn mul_mod(a: &UniPoly, b: &UniPoly, f: &UniPoly) -> Result<UniPoly, ArithError> {
    let fk = f.embed(a.field())?;
    (a * b).rem(&fk)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(cs: &[i64]) -> UniPoly {
        UniPoly::from_i64(FieldKind::Rational, cs)
    }

    fn ints(cs: &[i64]) -> Vec<Scalar> {
        cs.iter().map(|&c| Scalar::from(c)).collect()
    }

    #[test]
    fn cube_root_trace_norm() {
        let e = EtaleAlgebra::monogenic(q(&[-2, 0, 0, 1])).unwrap();
        let (t, n) = nf_trace_norm(&e, &ints(&[0, 1, 0]));
        assert_eq!((t.to_string(), n.to_string()), ("0".into(), "2".into()));
        let (t1, n1) = nf_trace_norm(&e, &e.one());
        assert_eq!((t1.to_string(), n1.to_string()), ("3".into(), "1".into()));
    }

    #[test]
    fn quadratic_conjugates() {
        let e = EtaleAlgebra::monogenic(q(&[-5, 0, 1])).unwrap();
        let (t, n) = nf_trace_norm(&e, &ints(&[3, 2]));
        assert_eq!((t.to_string(), n.to_string()), ("6".into(), "-11".into()));
    }

    #[test]
    fn trace_table_of_cube_root_two() {
        let e = EtaleAlgebra::monogenic(q(&[-2, 0, 0, 1])).unwrap();
        let x = ints(&[0, 1, 0]);
        let mut p = e.one();
        let mut traces = vec![];
        for _ in 0..5 {
            traces.push(e.trace_norm(&p).0.to_string());
            p = e.mul(&p, &x);
        }
        assert_eq!(traces, ["3", "0", "0", "6", "0"]);
    }

    #[test]
    fn split_algebra_trace_form_is_identity() {
        let e = EtaleAlgebra::split(3).unwrap();
        assert_eq!(e.trace_form(), Matrix::identity(3, &Scalar::from(1)));
    }

    #[test]
    fn squarefree_is_enforced() {
        assert!(matches!(MonogenicAlgebra::new(q(&[0, 0, 1])), Err(ArithError::NotSquarefree(_))));
    }

    #[test]
    fn idempotent_for_cube_root_two() {
        let k = FieldKind::Extension(ExtField::new(&q(&[-2, 0, 0, 1]), "t").unwrap());
        let t = k.generator().unwrap();
        let f = q(&[-2, 0, 0, 1]);
        let e = etale_split_idempotent(&f, &t).unwrap();
        let t2 = &t * &t;
        let sixth = k.from_rational(&BigRational::new(1.into(), 6.into())).unwrap();
        assert_eq!(e.coeff(0), k.from_rational(&BigRational::new(1.into(), 3.into())).unwrap());
        assert_eq!(e.coeff(1), &t2 * &sixth);
        assert_eq!(e.coeff(2), &t * &sixth);
        let sq = mul_mod(&e, &e, &f).unwrap();
        assert_eq!(sq, e);
    }

    #[test]
    fn idempotent_for_split_cubic() {
        // (x-1)(x-2)(x-3) at theta = 1 gives (x-2)(x-3)/2
        let f = q(&[-6, 11, -6, 1]);
        let e = etale_split_idempotent(&f, &Scalar::from(1)).unwrap();
        assert_eq!(e, q(&[6, -5, 1]).scale(&Scalar::ratio(1, 2)));
        assert_eq!(etale_split_idempotent(&f, &Scalar::from(4)), Err(ArithError::InvalidRoot));
    }
}
