//! Dense univariate polynomials over any [`FieldKind`].
//!
//! Coefficients are stored constant term first with no trailing zeros, so the
//! zero polynomial is the empty vector and its degree is `None`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::{FieldKind, Scalar};
use super::ArithError;

#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly {
    field: FieldKind,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: FieldKind, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: FieldKind) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::new(c.field(), vec![c])
    }

    pub fn x(field: FieldKind) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        UniPoly { field, coeffs }
    }

    /// `x - r`.
    pub fn linear_root(r: &Scalar) -> Self {
        UniPoly::new(r.field(), vec![-r, r.one_like()])
    }

    /// Integer coefficients, constant term first.
    pub fn from_i64(field: FieldKind, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        UniPoly::new(field, cs)
    }

    pub fn field(&self) -> &FieldKind {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.field.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().inv())
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = at.zero_like();
        for c in self.coeffs.iter().rev() {
            let c = at.field().embed(c).expect("evaluation point field contains coefficient field");
            acc = &(&acc * at) + &c;
        }
        acc
    }

    /// Formal derivative, with exponents multiplied inside the coefficient field.
    pub fn derivative(&self) -> UniPoly {
        let cs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &self.field.from_i64(i as i64)).collect();
        UniPoly::new(self.field.clone(), cs)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::constant(self.field.one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; fails on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly), ArithError> {
        let dd = d.degree().ok_or(ArithError::DivisionByZero)?;
        let lc_inv = d.leading().inv();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((UniPoly::zero(self.field.clone()), self.clone()));
        }
        let mut quot = vec![self.field.zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * dc);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(self.field.clone(), quot), UniPoly::new(self.field.clone(), rem)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly, ArithError> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` not normalised.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::constant(f.one()), UniPoly::zero(f.clone()));
        let (mut t0, mut t1) = (UniPoly::zero(f.clone()), UniPoly::constant(f.one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("r1 nonzero");
            r0 = std::mem::replace(&mut r1, r);
            let s2 = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t2);
        }
        (r0, s0, t0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Roots lying in the coefficient field. Exhaustive over `GF(p)`,
    /// rational-root test over `QQ`; extensions are not searched.
    pub fn roots_in_base(&self) -> Result<Vec<Scalar>, ArithError> {
        match &self.field {
            FieldKind::Prime(p) => Ok((0..*p as i64).map(|r| self.field.from_i64(r)).filter(|r| self.eval(r).is_zero()).collect()),
            FieldKind::Rational => rational_roots(self),
            FieldKind::Extension(_) => Err(ArithError::FieldMismatch { left: "QQ or GF(p)".into(), right: self.field.to_string() }),
        }
    }

    pub fn has_root_in_base(&self) -> Result<bool, ArithError> {
        Ok(!self.roots_in_base()?.is_empty())
    }

    /// Maps coefficients into a larger field.
    pub fn embed(&self, into: &FieldKind) -> Result<UniPoly, ArithError> {
        let cs = self.coeffs.iter().map(|c| into.embed(c)).collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::new(into.clone(), cs))
    }
}

/// Largest coefficient magnitude for which divisor enumeration is attempted.
const ROOT_SEARCH_BOUND: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, ArithError> {
    let m = n.abs().to_u64().filter(|&m| m <= ROOT_SEARCH_BOUND).ok_or(ArithError::CoefficientTooLarge)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(BigInt::from(d));
            if d != m / d {
                out.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    out.sort();
    Ok(out)
}

/// Primitive integer model: clears denominators and content, leading coefficient positive.
pub fn primitive_integer_model(f: &UniPoly) -> Vec<BigInt> {
    let qs: Vec<BigRational> = f.coeffs().iter().map(|c| c.as_rational().expect("rational polynomial").clone()).collect();
    let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut ints: Vec<BigInt> = ints.into_iter().map(|c| c / &content).collect();
    if ints.last().is_some_and(|c| c.is_negative()) {
        ints.iter_mut().for_each(|c| *c = -c.clone());
    }
    ints
}

/// Distinct rational roots, ascending.
fn rational_roots(f: &UniPoly) -> Result<Vec<Scalar>, ArithError> {
    if f.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    let mut roots = Vec::new();
    let mut g = f.clone();
    if g.coeff(0).is_zero() {
        roots.push(Scalar::from(0));
        while g.coeff(0).is_zero() && !g.is_zero() {
            g = g.div_rem(&UniPoly::x(FieldKind::Rational))?.0;
        }
    }
    if g.degree() == Some(0) {
        return Ok(roots);
    }
    let ints = primitive_integer_model(&g);
    let (a0, an) = (&ints[0], ints.last().unwrap());
    for p in divisors(a0)? {
        for q in divisors(an)? {
            for sign in [1, -1] {
                let r = Scalar::Rational(BigRational::new(&p * BigInt::from(sign), q.clone()));
                if g.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort_by(|a, b| a.as_rational().cmp(&b.as_rational()));
    Ok(roots)
}

/// Factors a rational polynomial of degree at most 3 into monic irreducibles
/// with multiplicity. Linear factors come first in ascending root order.
pub fn factor_small(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>, ArithError> {
    if f.field() != &FieldKind::Rational {
        return Err(ArithError::FieldMismatch { left: "QQ".into(), right: f.field().to_string() });
    }
    let deg = f.degree().ok_or(ArithError::DivisionByZero)?;
    if deg > 3 {
        return Err(ArithError::UnsupportedDegree { degree: deg, max: 3 });
    }
    let mut rest = f.monic();
    let mut out = Vec::new();
    for r in rational_roots(&rest)? {
        let lin = UniPoly::linear_root(&r);
        let mut mult = 0;
        loop {
            let (q, rem) = rest.div_rem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        out.push((lin, mult));
    }
    // No rational roots left, so a remaining factor of degree 2 or 3 is irreducible.
    if rest.degree().unwrap_or(0) > 0 {
        out.push((rest, 1));
    }
    Ok(out)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new(self.field.clone(), (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new(self.field.clone(), (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.field.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(self.field.clone());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(self.field.clone(), out)
    }
}

/// Renders `c_0 + c_1 v + ...` highest degree first, e.g. `t^3 - 2`.
pub fn format_univariate(coeffs: &[Scalar], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mon = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let coef = mag.to_string();
        let coef = if coef.contains(' ') { format!("({coef})") } else { coef };
        match (mon.is_empty(), mag.is_one()) {
            (true, _) => out.push_str(&coef),
            (false, true) => out.push_str(&mon),
            (false, false) => out.push_str(&format!("{coef}*{mon}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_univariate(&self.coeffs, "x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(cs: &[i64]) -> UniPoly {
        UniPoly::from_i64(FieldKind::Rational, cs)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[-1, 0, 0, 1])), q(&[-1, 1]));
        assert_eq!(q(&[-2, 0, 0, 1]).gcd(&q(&[-2, 0, 1])), q(&[1]));
        assert_eq!(q(&[4, 0, 2]).gcd(&UniPoly::zero(FieldKind::Rational)), q(&[2, 0, 1]));
        assert!(UniPoly::zero(FieldKind::Rational).gcd(&UniPoly::zero(FieldKind::Rational)).is_zero());
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(UniPoly::zero(FieldKind::Rational).degree(), None);
        assert_eq!(q(&[0, 0, 0]).degree(), None);
        assert_eq!(q(&[5]).degree(), Some(0));
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor_small(&q(&[-2, 0, 0, 1])).unwrap(), vec![(q(&[-2, 0, 0, 1]), 1)]);
        assert_eq!(factor_small(&q(&[6, -5, 1])).unwrap(), vec![(q(&[-2, 1]), 1), (q(&[-3, 1]), 1)]);
        assert_eq!(factor_small(&q(&[0, 0, 1])).unwrap(), vec![(q(&[0, 1]), 2)]);
        assert_eq!(factor_small(&q(&[1, 0, 0, 0, 1])), Err(ArithError::UnsupportedDegree { degree: 4, max: 3 }));
    }

    #[test]
    fn factor_with_rational_nonintegral_root() {
        // 2x^2 - x = x (2x - 1)
        let f = q(&[0, -1, 2]);
        let fs = factor_small(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[1].0, UniPoly::linear_root(&Scalar::ratio(1, 2)));
    }

    #[test]
    fn derivative_in_characteristic_two() {
        let f2 = FieldKind::prime(2).unwrap();
        let f = UniPoly::from_i64(f2, &[0, 0, 1]);
        assert!(f.derivative().is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(q(&[-2, 0, 0, 1]).to_string(), "x^3 - 2");
        assert_eq!(q(&[1, -1]).to_string(), "-x + 1");
    }
}
