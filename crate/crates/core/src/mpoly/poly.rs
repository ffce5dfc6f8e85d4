use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::monomial::Monomial;
use super::PolyError;
use crate::arith::{FieldKind, Scalar};

/// Named variables over a coefficient field.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
    field: FieldKind,
}

pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S], field: FieldKind) -> Ring {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            assert!(!vars[..i].contains(v), "duplicate variable {v}");
        }
        Arc::new(PolyRing { vars, field })
    }

    /// `prefix1 .. prefixN`.
    pub fn indexed(prefix: &str, n: usize, field: FieldKind) -> Ring {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names, field)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> &FieldKind {
        &self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(", "))
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl MultiPoly {
    pub fn zero(ring: &Ring) -> Self {
        MultiPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::from_terms(ring, [(Monomial::one(ring.nvars()), c)])
    }

    pub fn from_i64(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, ring.field.from_i64(c))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::from_terms(ring, [(Monomial::var(ring.nvars(), i), ring.field.one())])
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self, PolyError> {
        let i = ring.var_index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    /// All variables of the ring, in order.
    pub fn vars(ring: &Ring) -> Vec<Self> {
        (0..ring.nvars()).map(|i| Self::var(ring, i)).collect()
    }

    pub fn monomial(ring: &Ring, exps: &[u32], c: Scalar) -> Self {
        assert_eq!(exps.len(), ring.nvars(), "exponent length");
        Self::from_terms(ring, [(Monomial::new(exps.to_vec()), c)])
    }

    /// Sums repeated monomials and drops zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &FieldKind {
        &self.ring.field
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial; `None` if some variable occurs.
    pub fn constant_value(&self) -> Option<Scalar> {
        self.is_constant().then(|| self.coeff(&Monomial::one(self.ring.nvars())))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.values().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Largest exponent of each variable.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.ring.nvars()];
        for m in self.terms.keys() {
            for (o, e) in out.iter_mut().zip(m.exps()) {
                *o = (*o).max(*e);
            }
        }
        out
    }

    /// Greatest common monomial divisor of the support.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            Some(first) => it.fold(first.clone(), |g, m| g.gcd(m)),
            None => Monomial::one(self.ring.nvars()),
        }
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exps()[i] > 0)
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() })
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    /// Divides every monomial by `m`; panics unless `m` divides the whole support.
    pub fn div_monomial(&self, m: &Monomial) -> MultiPoly {
        let terms = self.terms.iter().map(|(k, v)| (k.div(m).expect("monomial divides support"), v.clone()));
        MultiPoly { ring: self.ring.clone(), terms: terms.collect() }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// Partial derivative; exponents are multiplied inside the coefficient field.
    pub fn derivative(&self, var: usize) -> MultiPoly {
        let field = &self.ring.field;
        let terms = self.terms.iter().filter(|(m, _)| m.exps()[var] > 0).map(|(m, c)| {
            let mut e = m.exps().to_vec();
            let k = e[var];
            e[var] -= 1;
            (Monomial::new(e), c * &field.from_i64(i64::from(k)))
        });
        Self::from_terms(&self.ring, terms)
    }

    /// Evaluates at a point whose coordinates live in a field containing the coefficients.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar, PolyError> {
        if point.len() != self.ring.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.ring.nvars(), got: point.len() });
        }
        let target = match point.first() {
            Some(p) => p.field(),
            None => self.ring.field.clone(),
        };
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.embed(c)?;
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t = t.checked_mul(&x.pow(u64::from(e)))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Replaces variable `i` by `images[i]`; the result lives in the images' ring.
    pub fn substitute(&self, target: &Ring, images: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.ring.nvars(), got: images.len() });
        }
        if let Some(bad) = images.iter().find(|p| !same_ring(&p.ring, target)) {
            return Err(PolyError::RingMismatch { left: target.to_string(), right: bad.ring.to_string() });
        }
        let maxe = self.max_exponents();
        let powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .zip(&maxe)
            .map(|(img, &e)| {
                let mut v = vec![MultiPoly::one(target)];
                for k in 1..=e as usize {
                    let next = &v[k - 1] * img;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, target.field.embed(c)?);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Same polynomial with coefficients embedded into another ring's field.
    pub fn embed(&self, target: &Ring) -> Result<MultiPoly, PolyError> {
        if target.nvars() != self.ring.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.ring.nvars(), got: target.nvars() });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), target.field.embed(c)?));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Moves to a ring with more variables, variable `i` going to `positions[i]`.
    pub fn relabel(&self, target: &Ring, positions: &[usize]) -> Result<MultiPoly, PolyError> {
        if positions.len() != self.ring.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.ring.nvars(), got: positions.len() });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0; target.nvars()];
            for (i, &x) in m.exps().iter().enumerate() {
                e[positions[i]] += x;
            }
            terms.push((Monomial::new(e), target.field.embed(c)?));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Single-divisor division; `Some(q)` iff `self == q * d`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = d.leading_term()?;
        let lc_inv = lc.inv();
        let mut rem = self.clone();
        let mut q = Self::zero(&self.ring);
        while let Some((m, c)) = rem.leading_term() {
            let t = m.div(lm)?;
            let k = c * &lc_inv;
            rem = &rem - &d.mul_term(&t, &k);
            q.add_term(t, k);
        }
        Some(q)
    }

    /// Parses text such as `X1*X7 - 2*X4^2 + 1/3`.
    pub fn parse(ring: &Ring, text: &str) -> Result<MultiPoly, PolyError> {
        Parser { ring, src: text.as_bytes(), pos: 0 }.poly()
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> PolyError {
        PolyError::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = MultiPoly::zero(self.ring);
        let mut sign = 1;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                None => return Ok(acc),
                Some(_) => return Err(self.err("unexpected character")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let q = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(n)
                };
                Ok(MultiPoly::constant(self.ring, self.ring.field.from_rational(&q)?))
            }
            Some(b'(') => {
                self.pos += 1;
                let start = self.pos;
                let mut depth = 1;
                while self.pos < self.src.len() && depth > 0 {
                    match self.src[self.pos] {
                        b'(' => depth += 1,
                        b')' => depth -= 1,
                        _ => {}
                    }
                    self.pos += 1;
                }
                if depth != 0 {
                    return Err(self.err("unbalanced parenthesis"));
                }
                let inner = std::str::from_utf8(&self.src[start..self.pos - 1]).map_err(|_| self.err("utf8"))?;
                let p = MultiPoly::parse(self.ring, inner)?;
                self.exponent().map(|e| p.pow(e))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).map_err(|_| self.err("utf8"))?;
                let v = match self.ring.var_index(name) {
                    Some(i) => MultiPoly::var(self.ring, i),
                    None => match self.ring.field.generator() {
                        Some(g) if matches!(&self.ring.field, FieldKind::Extension(k) if k.name() == name) => {
                            MultiPoly::constant(self.ring, g)
                        }
                        _ => return Err(PolyError::UnknownVariable(name.to_string())),
                    },
                };
                self.exponent().map(|e| v.pow(e))
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    fn exponent(&mut self) -> Result<u32, PolyError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.integer()?.try_into().map_err(|_| self.err("exponent out of range"))
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).map_err(|_| self.err("utf8"))?;
        s.parse().map_err(|_| self.err("bad integer"))
    }
}

fn format_monomial(m: &Monomial, vars: &[String]) -> String {
    let parts: Vec<String> = m
        .exps()
        .iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    parts.join("*")
}

/// Descending monomial order, `*` between factors, ` - ` for negative rational coefficients.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mon = format_monomial(m, &self.ring.vars);
            let coef = mag.to_string();
            let coef = if coef.contains(' ') { format!("({coef})") } else { coef };
            match (mon.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{coef}")?,
                (false, true) => write!(f, "{mon}")?,
                (false, false) => write!(f, "{coef}*{mon}")?,
            }
        }
        Ok(())
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                match self.$checked(rhs) {
                    Ok(p) => p,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring7() -> Ring {
        PolyRing::indexed("X", 7, FieldKind::Rational)
    }

    #[test]
    fn text_is_descending_grevlex() {
        let r = ring7();
        let n = MultiPoly::parse(&r, "X1*X7 + X2*X6 + X3*X5 + X4^2").unwrap();
        assert_eq!(n.to_string(), "X4^2 + X3*X5 + X2*X6 + X1*X7");
        let p = MultiPoly::parse(&r, "1 - X1 + 1/2*X2^2").unwrap();
        assert_eq!(p.to_string(), "1/2*X2^2 - X1 + 1");
        assert_eq!(MultiPoly::parse(&r, "-X1").unwrap().to_string(), "-X1");
    }

    #[test]
    fn parse_round_trip() {
        let r = ring7();
        let p = MultiPoly::parse(&r, "(X1 + X2)^3 - 3*X1*X2*(X1 + X2)").unwrap();
        assert_eq!(p, MultiPoly::parse(&r, "X1^3 + X2^3").unwrap());
        assert_eq!(MultiPoly::parse(&r, &p.to_string()).unwrap(), p);
        assert!(matches!(MultiPoly::parse(&r, "X9"), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn derivative_in_char_three() {
        let r = PolyRing::new(&["x", "y"], FieldKind::prime(3).unwrap());
        let p = MultiPoly::parse(&r, "x^3 + x*y").unwrap();
        assert_eq!(p.derivative(0), MultiPoly::parse(&r, "y").unwrap());
    }

    #[test]
    fn exact_division() {
        let r = ring7();
        let a = MultiPoly::parse(&r, "X1^2 - X2^2").unwrap();
        let b = MultiPoly::parse(&r, "X1 + X2").unwrap();
        assert_eq!(a.div_exact(&b), Some(MultiPoly::parse(&r, "X1 - X2").unwrap()));
        assert_eq!(b.div_exact(&a), None);
    }

    #[test]
    fn substitution_and_eval() {
        let r = PolyRing::new(&["x", "y"], FieldKind::Rational);
        let p = MultiPoly::parse(&r, "x^2 + y").unwrap();
        let s = PolyRing::new(&["t"], FieldKind::Rational);
        let t = MultiPoly::var(&s, 0);
        let q = p.substitute(&s, &[&t + &MultiPoly::one(&s), t.clone()]).unwrap();
        assert_eq!(q, MultiPoly::parse(&s, "t^2 + 3*t + 1").unwrap());
        assert_eq!(q.eval(&[Scalar::from(2)]).unwrap(), Scalar::from(11));
    }
}
