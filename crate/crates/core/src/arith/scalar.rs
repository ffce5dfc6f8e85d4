//! Field descriptors and exact scalars.
//!
//! A [`Scalar`] lives in exactly one of three kinds of field: the rationals,
//! a prime field `GF(p)`, or a simple algebraic extension of one of those
//! (see [`ExtField`]). Arithmetic between scalars of different fields is a
//! programming error: the `checked_*` methods report it as
//! [`ArithError::FieldMismatch`], the operator impls panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ext::{ExtElem, ExtField};
use super::ArithError;

/// Largest prime accepted by [`FieldKind::prime`].
pub const DEFAULT_PRIME_CAP: u64 = 97;

/// Returns true when `n` is prime (trial division; inputs are small).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of the prime field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = ((value as i128 % m) + m) % m;
        Fp { value: v as u64, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn add(self, o: Fp) -> Fp {
        Fp { value: (self.value + o.value) % self.modulus, modulus: self.modulus }
    }

    fn sub(self, o: Fp) -> Fp {
        Fp { value: (self.value + self.modulus - o.value) % self.modulus, modulus: self.modulus }
    }

    fn mul(self, o: Fp) -> Fp {
        let v = (self.value as u128 * o.value as u128) % self.modulus as u128;
        Fp { value: v as u64, modulus: self.modulus }
    }

    fn neg(self) -> Fp {
        Fp { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }

    fn inv(self) -> Option<Fp> {
        if self.value == 0 {
            return None;
        }
        let e = (self.value as i64).extended_gcd(&(self.modulus as i64));
        debug_assert_eq!(e.gcd, 1);
        Some(Fp::new(e.x, self.modulus))
    }
}

/// The field a scalar, polynomial ring or matrix lives over.
#[derive(Clone, Debug)]
pub enum FieldKind {
    Rational,
    Prime(u64),
    Extension(Arc<ExtField>),
}

impl PartialEq for FieldKind {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldKind::Rational, FieldKind::Rational) => true,
            (FieldKind::Prime(p), FieldKind::Prime(q)) => p == q,
            (FieldKind::Extension(a), FieldKind::Extension(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for FieldKind {}

impl FieldKind {
    /// `GF(p)` with the default cap on `p`.
    pub fn prime(p: u64) -> Result<Self, ArithError> {
        Self::prime_with_cap(p, DEFAULT_PRIME_CAP)
    }

    pub fn prime_with_cap(p: u64, cap: u64) -> Result<Self, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        if p > cap {
            return Err(ArithError::PrimeAboveCap { p, cap });
        }
        Ok(FieldKind::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldKind::Rational => 0,
            FieldKind::Prime(p) => *p,
            FieldKind::Extension(e) => e.base().characteristic(),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldKind::Prime(p) => Scalar::Prime(Fp::new(n, *p)),
            FieldKind::Extension(e) => Scalar::Ext(ExtElem::from_base(e, e.base().from_i64(n))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldKind::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p)).to_i64().expect("residue fits");
                Scalar::Prime(Fp::new(r, *p))
            }
            FieldKind::Extension(e) => Scalar::Ext(ExtElem::from_base(e, e.base().from_bigint(n))),
        }
    }

    /// Image of a rational number. Fails in `GF(p)` when `p` divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, ArithError> {
        match self {
            FieldKind::Rational => Ok(Scalar::Rational(q.clone())),
            _ => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                num.checked_div(&den).map_err(|_| ArithError::NotRepresentable(q.to_string()))
            }
        }
    }

    /// Maps a scalar of this field's base (or of this field itself) into this field.
    pub fn embed(&self, s: &Scalar) -> Result<Scalar, ArithError> {
        let sf = s.field();
        if &sf == self {
            return Ok(s.clone());
        }
        match self {
            FieldKind::Extension(e) if &sf == e.base() => Ok(Scalar::Ext(ExtElem::from_base(e, s.clone()))),
            FieldKind::Extension(e) if sf == FieldKind::Rational => {
                Ok(Scalar::Ext(ExtElem::from_base(e, e.base().from_rational(s.as_rational().unwrap())?)))
            }
            FieldKind::Prime(_) if sf == FieldKind::Rational => self.from_rational(s.as_rational().unwrap()),
            _ => Err(ArithError::FieldMismatch { left: self.to_string(), right: sf.to_string() }),
        }
    }

    /// The extension generator, or `None` for prime fields and the rationals.
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            FieldKind::Extension(e) => Some(Scalar::Ext(ExtElem::generator(e))),
            _ => None,
        }
    }

    /// Degree over the prime field (1 for `QQ` and `GF(p)`).
    pub fn degree(&self) -> usize {
        match self {
            FieldKind::Extension(e) => e.degree(),
            _ => 1,
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "QQ"),
            FieldKind::Prime(p) => write!(f, "GF({p})"),
            FieldKind::Extension(e) => write!(f, "{e}"),
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Prime(Fp),
    Ext(ExtElem),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Prime(a), Scalar::Prime(b)) => a == b,
            (Scalar::Ext(a), Scalar::Ext(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Rational(q)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl Scalar {
    /// The rational `n/d`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn field(&self) -> FieldKind {
        match self {
            Scalar::Rational(_) => FieldKind::Rational,
            Scalar::Prime(a) => FieldKind::Prime(a.modulus),
            Scalar::Ext(e) => FieldKind::Extension(e.field().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime(a) => a.value == 0,
            Scalar::Ext(e) => e.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime(a) => a.value == 1,
            Scalar::Ext(e) => e.is_one(),
        }
    }

    pub fn zero_like(&self) -> Scalar {
        self.field().zero()
    }

    pub fn one_like(&self) -> Scalar {
        self.field().one()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_ext(&self) -> Option<&ExtElem> {
        match self {
            Scalar::Ext(e) => Some(e),
            _ => None,
        }
    }

    /// True for a rational with negative value; used for sign-aware printing.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }

    fn mismatch(&self, other: &Scalar) -> ArithError {
        ArithError::FieldMismatch { left: self.field().to_string(), right: other.field().to_string() }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Prime(a), Scalar::Prime(b)) if a.modulus == b.modulus => Ok(Scalar::Prime(a.add(*b))),
            (Scalar::Ext(a), Scalar::Ext(b)) if a.same_field(b) => Ok(Scalar::Ext(a.add(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a - b)),
            (Scalar::Prime(a), Scalar::Prime(b)) if a.modulus == b.modulus => Ok(Scalar::Prime(a.sub(*b))),
            (Scalar::Ext(a), Scalar::Ext(b)) if a.same_field(b) => Ok(Scalar::Ext(a.sub(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Prime(a), Scalar::Prime(b)) if a.modulus == b.modulus => Ok(Scalar::Prime(a.mul(*b))),
            (Scalar::Ext(a), Scalar::Ext(b)) if a.same_field(b) => Ok(Scalar::Ext(a.mul(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_inv(&self) -> Result<Scalar, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime(a) => Scalar::Prime(a.inv().expect("nonzero")),
            Scalar::Ext(e) => Scalar::Ext(e.inv()?),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        if self.field() != other.field() {
            return Err(self.mismatch(other));
        }
        self.checked_mul(&other.checked_inv()?)
    }

    /// Equality that reports operands from different fields instead of answering `false`.
    pub fn checked_eq(&self, other: &Scalar) -> Result<bool, ArithError> {
        if self.field() != other.field() {
            return Err(self.mismatch(other));
        }
        Ok(self == other)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Scalar {
        self.checked_inv().expect("inverse of zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime(a) => Scalar::Prime(a.neg()),
            Scalar::Ext(e) => Scalar::Ext(e.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(s) => s,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Prime(a) => write!(f, "{}", a.value),
            Scalar::Ext(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum_is_reduced() {
        let s = Scalar::ratio(1, 3) + Scalar::ratio(1, 6);
        assert_eq!(s, Scalar::ratio(1, 2));
        assert_eq!(s.to_string(), "1/2");
        assert_eq!(Scalar::ratio(2, -4).to_string(), "-1/2");
    }

    #[test]
    fn inverse_mod_seven() {
        let f = FieldKind::prime(7).unwrap();
        assert_eq!(f.from_i64(3).inv(), f.from_i64(5));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::from(0).checked_inv(), Err(ArithError::DivisionByZero));
        let f = FieldKind::prime(5).unwrap();
        assert!(f.zero().checked_inv().is_err());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Scalar::from(1);
        let b = FieldKind::prime(3).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(ArithError::FieldMismatch { .. })));
        assert!(a.checked_eq(&b).is_err());
    }

    #[test]
    fn prime_constructor_validates() {
        assert_eq!(FieldKind::prime(9), Err(ArithError::NotPrime(9)));
        assert_eq!(FieldKind::prime(101), Err(ArithError::PrimeAboveCap { p: 101, cap: 97 }));
        assert!(FieldKind::prime_with_cap(101, 200).is_ok());
    }

    #[test]
    fn rationals_reduce_into_prime_fields() {
        let f = FieldKind::prime(7).unwrap();
        let q = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(f.from_rational(&q).unwrap(), f.from_i64(5));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert!(f.from_rational(&bad).is_err());
    }
}
