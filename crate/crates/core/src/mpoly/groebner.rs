use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::monomial::Monomial;
use super::poly::{MultiPoly, Ring};
use super::PolyError;
use crate::arith::Scalar;

/// Size limits for Buchberger's algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerCaps {
    pub max_generators: usize,
    pub max_vars: usize,
    pub max_basis: usize,
    pub max_pairs: usize,
}

impl Default for GroebnerCaps {
    fn default() -> Self {
        GroebnerCaps { max_generators: 6, max_vars: 8, max_basis: 400, max_pairs: 50_000 }
    }
}

pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&l.div(mf).expect("lcm"), &cf.inv());
    let b = g.mul_term(&l.div(mg).expect("lcm"), &cg.inv());
    &a - &b
}

/// Full remainder of `f` on division by `basis`.
pub fn reduce(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let mut p = f.clone();
    let mut rem_terms: Vec<(Monomial, Scalar)> = Vec::new();
    while let Some((m, c)) = p.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        match basis.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m))) {
            Some(g) => {
                let (lm, lc) = g.leading_term().expect("nonzero");
                let t = m.div(lm).expect("divides");
                p = &p - &g.mul_term(&t, &(&c * &lc.inv()));
            }
            None => {
                p = &p - &MultiPoly::from_terms(f.ring(), [(m.clone(), c.clone())]);
                rem_terms.push((m, c));
            }
        }
    }
    MultiPoly::from_terms(f.ring(), rem_terms)
}

/// Reduced Gröbner basis (monic, grevlex) of the ideal generated by `gens`.
pub fn buchberger(gens: &[MultiPoly]) -> Result<Vec<MultiPoly>, PolyError> {
    buchberger_with(gens, GroebnerCaps::default())
}

pub fn buchberger_with(gens: &[MultiPoly], caps: GroebnerCaps) -> Result<Vec<MultiPoly>, PolyError> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    if gens.len() > caps.max_generators {
        return Err(PolyError::ResourceCap { what: "generators", limit: caps.max_generators });
    }
    if ring.nvars() > caps.max_vars {
        return Err(PolyError::ResourceCap { what: "variables", limit: caps.max_vars });
    }
    let mut g: Vec<MultiPoly> = Vec::new();
    for p in gens {
        p.checked_add(&MultiPoly::zero(&ring))?;
        if !p.is_zero() {
            g.push(p.monic());
        }
    }
    // (i, j) with i < j, ordered by the degree of the lcm then insertion
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.insert((lcm_degree(&g[i], &g[j]), i, j));
        }
    }
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut processed = 0usize;
    while let Some(pair) = pairs.pop_first() {
        let (_, i, j) = pair;
        done.insert((i, j));
        processed += 1;
        if processed > caps.max_pairs {
            return Err(PolyError::ResourceCap { what: "S-pairs", limit: caps.max_pairs });
        }
        let (li, lj) = (g[i].leading_monomial().expect("nonzero"), g[j].leading_monomial().expect("nonzero"));
        // product criterion
        if li.is_coprime(lj) {
            continue;
        }
        // chain criterion
        let l = li.lcm(lj);
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k].leading_monomial().expect("nonzero").divides(&l)
                && done.contains(&ordered(i, k))
                && done.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        let h = reduce(&s_polynomial(&g[i], &g[j]), &g);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![MultiPoly::one(&ring)]);
        }
        g.push(h.monic());
        if g.len() > caps.max_basis {
            return Err(PolyError::ResourceCap { what: "basis size", limit: caps.max_basis });
        }
        let n = g.len() - 1;
        for k in 0..n {
            pairs.insert((lcm_degree(&g[k], &g[n]), k, n));
        }
    }
    Ok(interreduce(g))
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn lcm_degree(a: &MultiPoly, b: &MultiPoly) -> u32 {
    a.leading_monomial().expect("nonzero").lcm(b.leading_monomial().expect("nonzero")).degree()
}

fn interreduce(g: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let lm = p.leading_monomial().expect("nonzero");
        let dominated = g.iter().enumerate().any(|(k, q)| {
            let lq = q.leading_monomial().expect("nonzero");
            k != i && lq.divides(lm) && (lq != lm || k < i)
        });
        if !dominated {
            minimal.push(p.clone());
        }
    }
    let mut out: Vec<MultiPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<MultiPoly> = minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, q)| q.clone()).collect();
            let lead = MultiPoly::from_terms(minimal[i].ring(), [(minimal[i].leading_monomial().expect("nonzero").clone(), minimal[i].field().one())]);
            let tail = &minimal[i] - &lead;
            (&lead + &reduce(&tail, &others)).monic()
        })
        .collect();
    out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    out
}

/// True iff every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner(basis: &[MultiPoly]) -> bool {
    (0..basis.len()).all(|j| (0..j).all(|i| reduce(&s_polynomial(&basis[i], &basis[j]), basis).is_zero()))
}

/// An ideal given by generators, with its Gröbner basis computed on first use.
#[derive(Debug)]
pub struct IdealBasis {
    ring: Ring,
    generators: Vec<MultiPoly>,
    caps: GroebnerCaps,
    basis: OnceLock<Result<Vec<MultiPoly>, PolyError>>,
}

impl Clone for IdealBasis {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        IdealBasis { ring: self.ring.clone(), generators: self.generators.clone(), caps: self.caps, basis }
    }
}

impl IdealBasis {
    pub fn new(ring: &Ring, generators: Vec<MultiPoly>) -> Self {
        Self::with_caps(ring, generators, GroebnerCaps::default())
    }

    pub fn with_caps(ring: &Ring, generators: Vec<MultiPoly>, caps: GroebnerCaps) -> Self {
        IdealBasis { ring: ring.clone(), generators, caps, basis: OnceLock::new() }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn groebner(&self) -> Result<&[MultiPoly], PolyError> {
        match self.basis.get_or_init(|| buchberger_with(&self.generators, self.caps)) {
            Ok(b) => Ok(b),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly, PolyError> {
        f.checked_add(&MultiPoly::zero(&self.ring))?;
        Ok(reduce(f, self.groebner()?))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// False iff the ideal is the unit ideal.
    pub fn is_proper(&self) -> Result<bool, PolyError> {
        Ok(!self.groebner()?.iter().any(MultiPoly::is_constant))
    }
}

pub fn normal_form(f: &MultiPoly, ideal: &IdealBasis) -> Result<MultiPoly, PolyError> {
    ideal.normal_form(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldKind;
    use crate::mpoly::PolyRing;

    #[test]
    fn unit_ideal() {
        let r = PolyRing::new(&["x"], FieldKind::Rational);
        let x = MultiPoly::var(&r, 0);
        let b = buchberger(&[x.clone(), &x + &MultiPoly::one(&r)]).unwrap();
        assert_eq!(b, vec![MultiPoly::one(&r)]);
    }

    #[test]
    fn twisted_cubic() {
        let r = PolyRing::new(&["x", "y", "z", "w"], FieldKind::Rational);
        let p = |s: &str| MultiPoly::parse(&r, s).unwrap();
        let gens = vec![p("x*z - y^2"), p("y*w - z^2"), p("x*w - y*z")];
        let b = buchberger(&gens).unwrap();
        assert!(is_groebner(&b));
        let ideal = IdealBasis::new(&r, gens);
        assert!(ideal.contains(&p("x*z^2 - y^2*z")).unwrap());
        assert!(!ideal.contains(&p("x")).unwrap());
        assert!(ideal.is_proper().unwrap());
    }

    #[test]
    fn caps_are_enforced() {
        let r = PolyRing::indexed("x", 9, FieldKind::Rational);
        let err = buchberger(&[MultiPoly::var(&r, 0)]).unwrap_err();
        assert_eq!(err, PolyError::ResourceCap { what: "variables", limit: 8 });
        let r = PolyRing::indexed("x", 2, FieldKind::Rational);
        let many = vec![MultiPoly::var(&r, 0); 7];
        assert!(matches!(buchberger(&many), Err(PolyError::ResourceCap { what: "generators", .. })));
    }
}
