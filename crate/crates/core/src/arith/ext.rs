//! Simple algebraic extensions `base[t]/(m(t))` of `QQ` or `GF(p)`.
//!
//! Over `QQ` these are the number fields carrying torsor data; over `GF(p)`
//! they supply the quadratic extensions needed when `GF(p)` itself has no
//! regular element of the Cartan subalgebra.

use std::fmt;
use std::sync::Arc;

use super::scalar::{FieldKind, Scalar};
use super::upoly::{format_univariate, UniPoly};
use super::ArithError;

/// Irreducibility is certified for moduli up to this degree.
pub const MAX_CERTIFIED_DEGREE: usize = 3;

#[derive(Debug)]
pub struct ExtField {
    base: FieldKind,
    /// Monic modulus, constant term first.
    modulus: Vec<Scalar>,
    name: String,
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.modulus == other.modulus
    }
}

impl ExtField {
    /// Builds `base[name]/(modulus)` after certifying that `modulus` is monic
    /// and irreducible. Only degrees up to [`MAX_CERTIFIED_DEGREE`] can be
    /// certified (no roots in the base suffices there).
    pub fn new(modulus: &UniPoly, name: &str) -> Result<Arc<ExtField>, ArithError> {
        let base = modulus.field().clone();
        if matches!(base, FieldKind::Extension(_)) {
            return Err(ArithError::FieldMismatch { left: "QQ or GF(p)".into(), right: base.to_string() });
        }
        let degree = modulus.degree().ok_or(ArithError::NotMonic)?;
        if degree == 0 {
            return Err(ArithError::NotIrreducible(modulus.to_string()));
        }
        if degree > MAX_CERTIFIED_DEGREE {
            return Err(ArithError::UnsupportedDegree { degree, max: MAX_CERTIFIED_DEGREE });
        }
        if !modulus.leading().is_one() {
            return Err(ArithError::NotMonic);
        }
        if degree > 1 && modulus.has_root_in_base()? {
            return Err(ArithError::NotIrreducible(modulus.to_string()));
        }
        Ok(Arc::new(ExtField { base, modulus: modulus.coeffs().to_vec(), name: name.to_string() }))
    }

    pub fn base(&self) -> &FieldKind {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> UniPoly {
        UniPoly::new(self.base.clone(), self.modulus.clone())
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Display for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]/({})", self.base, self.name, format_univariate(&self.modulus, &self.name))
    }
}

/// An element `c_0 + c_1 t + ... + c_{d-1} t^{d-1}` of an [`ExtField`].
#[derive(Clone, Debug)]
pub struct ExtElem {
    field: Arc<ExtField>,
    coeffs: Vec<Scalar>,
}

impl PartialEq for ExtElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coeffs == other.coeffs
    }
}

impl ExtElem {
    pub fn from_base(field: &Arc<ExtField>, c: Scalar) -> Self {
        let mut coeffs = vec![field.base.zero(); field.degree()];
        coeffs[0] = c;
        ExtElem { field: field.clone(), coeffs }
    }

    pub fn generator(field: &Arc<ExtField>) -> Self {
        Self::from_poly(field, &UniPoly::x(field.base.clone()))
    }

    /// Reduces a base-field polynomial modulo the defining polynomial.
    pub fn from_poly(field: &Arc<ExtField>, p: &UniPoly) -> Self {
        let r = p.rem(&field.modulus()).expect("modulus is nonzero");
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(field.degree(), field.base.zero());
        ExtElem { field: field.clone(), coeffs }
    }

    pub fn from_coeffs(field: &Arc<ExtField>, coeffs: Vec<Scalar>) -> Self {
        Self::from_poly(field, &UniPoly::new(field.base.clone(), coeffs))
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    /// Coordinates in the power basis `1, t, ..., t^{d-1}`.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> UniPoly {
        UniPoly::new(self.field.base.clone(), self.coeffs.clone())
    }

    pub fn same_field(&self, other: &ExtElem) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Scalar::is_zero)
    }

    pub(crate) fn add(&self, o: &ExtElem) -> ExtElem {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        ExtElem { field: self.field.clone(), coeffs }
    }

    pub(crate) fn sub(&self, o: &ExtElem) -> ExtElem {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        ExtElem { field: self.field.clone(), coeffs }
    }

    pub(crate) fn neg(&self) -> ExtElem {
        ExtElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub(crate) fn mul(&self, o: &ExtElem) -> ExtElem {
        Self::from_poly(&self.field, &(&self.to_poly() * &o.to_poly()))
    }

    pub(crate) fn inv(&self) -> Result<ExtElem, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        // a*s + m*t = g with g a nonzero constant since m is irreducible
        let (g, s, _) = self.to_poly().ext_gcd(&self.field.modulus());
        if g.degree() != Some(0) {
            return Err(ArithError::NotIrreducible(self.field.modulus().to_string()));
        }
        Ok(Self::from_poly(&self.field, &s.scale(&g.leading().inv())))
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_univariate(&self.coeffs, &self.field.name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube_root_two() -> Arc<ExtField> {
        ExtField::new(&UniPoly::from_i64(FieldKind::Rational, &[-2, 0, 0, 1]), "t").unwrap()
    }

    #[test]
    fn generator_times_its_square_is_two() {
        let k = FieldKind::Extension(cube_root_two());
        let t = k.generator().unwrap();
        assert_eq!(&t * &(&t * &t), k.from_i64(2));
    }

    #[test]
    fn inverse_of_generator() {
        let k = FieldKind::Extension(cube_root_two());
        let t = k.generator().unwrap();
        let inv = t.inv();
        assert_eq!(&inv * &t, k.one());
        assert_eq!(inv.to_string(), "1/2*t^2");
    }

    #[test]
    fn reducible_modulus_is_rejected() {
        let p = UniPoly::from_i64(FieldKind::Rational, &[-1, 0, 1]);
        assert!(matches!(ExtField::new(&p, "t"), Err(ArithError::NotIrreducible(_))));
        let quartic = UniPoly::from_i64(FieldKind::Rational, &[2, 0, 0, 0, 1]);
        assert!(matches!(ExtField::new(&quartic, "t"), Err(ArithError::UnsupportedDegree { degree: 4, .. })));
        let not_monic = UniPoly::from_i64(FieldKind::Rational, &[1, 0, 2]);
        assert_eq!(ExtField::new(&not_monic, "t").unwrap_err(), ArithError::NotMonic);
    }

    #[test]
    fn quadratic_extension_of_gf2() {
        let f2 = FieldKind::prime(2).unwrap();
        let k = FieldKind::Extension(ExtField::new(&UniPoly::from_i64(f2, &[1, 1, 1]), "w").unwrap());
        let w = k.generator().unwrap();
        // w^2 = w + 1, w^3 = 1
        assert_eq!(&w * &w, &w + &k.one());
        assert_eq!(w.pow(3), k.one());
        assert_eq!(k.characteristic(), 2);
    }
}
