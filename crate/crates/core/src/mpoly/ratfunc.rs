use std::fmt;

use super::poly::{MultiPoly, Ring};
use super::PolyError;
use crate::arith::{ArithError, FieldElement, Scalar};

/// Quotient `num / den` of polynomials over the same ring.
///
/// Kept lightly reduced: constant denominators are absorbed, common monomial
/// factors cancelled, and exact quotients taken when the division is clean.
/// Equality compares by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::Arith(ArithError::DivisionByZero));
        }
        num.checked_add(&MultiPoly::zero(den.ring()))?;
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.ring());
        RationalFunction { num: p, den }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_poly(MultiPoly::zero(ring))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_poly(MultiPoly::one(ring))
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::from_poly(MultiPoly::constant(ring, c))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::from_poly(MultiPoly::var(ring, i))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self::zero(den.ring());
        }
        if let Some(c) = den.constant_value() {
            return Self::from_poly(num.scale(&c.inv()));
        }
        let g = num.monomial_content().gcd(&den.monomial_content());
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_monomial(&g), den.div_monomial(&g)) };
        if let Some(q) = num.div_exact(&den) {
            return Self::from_poly(q);
        }
        let lc = den.leading_coeff().expect("nonzero denominator").inv();
        RationalFunction { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, PolyError> {
        if self.den == o.den {
            return Ok(Self::normalized(self.num.checked_add(&o.num)?, self.den.clone()));
        }
        let n = self.num.checked_mul(&o.den)?.checked_add(&o.num.checked_mul(&self.den)?)?;
        Ok(Self::normalized(n, self.den.checked_mul(&o.den)?))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, PolyError> {
        Ok(Self::normalized(self.num.checked_mul(&o.num)?, self.den.checked_mul(&o.den)?))
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, PolyError> {
        self.checked_add(&o.neg())
    }

    pub fn checked_inv(&self) -> Result<Self, PolyError> {
        if self.num.is_zero() {
            return Err(PolyError::Arith(ArithError::DivisionByZero));
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, PolyError> {
        self.checked_mul(&o.checked_inv()?)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Evaluates at a point; errors when the denominator vanishes there.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar, PolyError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(PolyError::Arith(ArithError::DivisionByZero));
        }
        Ok(self.num.eval(point)?.checked_div(&d)?)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        match (self.num.checked_mul(&other.den), other.num.checked_mul(&self.den)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl FieldElement for RationalFunction {
    fn zero_like(&self) -> Self {
        Self::zero(self.ring())
    }
    fn one_like(&self) -> Self {
        Self::one(self.ring())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(other).expect("same ring")
    }
    fn minus(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("same ring")
    }
    fn times(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("same ring")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn try_inv(&self) -> Result<Self, ArithError> {
        if self.num.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &MultiPoly| if p.num_terms() > 1 { format!("({p})") } else { p.to_string() };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// Substitutes rational functions for the variables of `f`.
///
/// Each image `N_i / D_i` enters through the common denominator
/// `prod D_i^(deg_i f)`, so only one polynomial substitution is performed.
pub fn mp_substitute(f: &MultiPoly, target: &Ring, images: &[RationalFunction]) -> Result<RationalFunction, PolyError> {
    if images.len() != f.ring().nvars() {
        return Err(PolyError::ArityMismatch { expected: f.ring().nvars(), got: images.len() });
    }
    let maxe = f.max_exponents();
    let mut acc = MultiPoly::zero(target);
    let mut den_total = MultiPoly::one(target);
    for (img, &e) in images.iter().zip(&maxe) {
        if e > 0 {
            den_total = den_total.checked_mul(&img.den.pow(e))?;
        }
    }
    let num_pows: Vec<Vec<MultiPoly>> = images.iter().zip(&maxe).map(|(img, &e)| powers(&img.num, e)).collect();
    let den_pows: Vec<Vec<MultiPoly>> = images.iter().zip(&maxe).map(|(img, &e)| powers(&img.den, e)).collect();
    for (m, c) in f.terms() {
        let mut t = MultiPoly::constant(target, target.field().embed(c)?);
        for (i, &e) in m.exps().iter().enumerate() {
            let e = e as usize;
            let top = maxe[i] as usize;
            if top == 0 {
                continue;
            }
            t = t.checked_mul(&num_pows[i][e])?.checked_mul(&den_pows[i][top - e])?;
        }
        acc = acc.checked_add(&t)?;
    }
    RationalFunction::new(acc, den_total)
}

fn powers(p: &MultiPoly, e: u32) -> Vec<MultiPoly> {
    let mut v = vec![MultiPoly::one(p.ring())];
    for k in 1..=e as usize {
        let next = &v[k - 1] * p;
        v.push(next);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldKind;
    use crate::mpoly::PolyRing;

    #[test]
    fn arithmetic_in_function_field() {
        let r = PolyRing::new(&["a", "b"], FieldKind::Rational);
        let a = RationalFunction::var(&r, 0);
        let b = RationalFunction::var(&r, 1);
        let s = a.try_inv().unwrap().plus(&b.try_inv().unwrap());
        let expect = RationalFunction::new(MultiPoly::parse(&r, "a + b").unwrap(), MultiPoly::parse(&r, "a*b").unwrap()).unwrap();
        assert_eq!(s, expect);
        assert_eq!(s.times(&a.times(&b)), a.plus(&b));
        assert!(s.times(&a.times(&b)).is_polynomial());
    }

    #[test]
    fn substitution_clears_denominators() {
        let r = PolyRing::new(&["x", "y"], FieldKind::Rational);
        let f = MultiPoly::parse(&r, "x^2 + y").unwrap();
        let s = PolyRing::new(&["t"], FieldKind::Rational);
        let t = RationalFunction::var(&s, 0);
        let r1 = mp_substitute(&f, &s, &[t.try_inv().unwrap(), t.clone()]).unwrap();
        let expect = RationalFunction::new(MultiPoly::parse(&s, "t^3 + 1").unwrap(), MultiPoly::parse(&s, "t^2").unwrap()).unwrap();
        assert_eq!(r1, expect);
        assert_eq!(r1.eval(&[Scalar::from(2)]).unwrap(), Scalar::ratio(9, 4));
    }
}
