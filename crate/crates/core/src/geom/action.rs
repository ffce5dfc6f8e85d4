use std::fmt;

use super::map::{maps_agree, RationalMapDescriptor};
use super::variety::VarietyDescriptor;
use super::GeomError;
use crate::arith::Scalar;
use crate::cert::Certificate;
use crate::mpoly::{mp_substitute, MultiPoly, RationalFunction, Ring};

/// The point map `x -> (c_0 x_{p(0)}, ..., c_{n-1} x_{p(n-1)})`.
///
/// Acting on functions it is the substitution `x_i -> c_i x_{p(i)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAction {
    label: String,
    perm: Vec<usize>,
    scalars: Vec<Scalar>,
}

impl MonomialAction {
    pub fn new(label: &str, perm: Vec<usize>, scalars: Vec<Scalar>) -> Result<Self, GeomError> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(GeomError::NotInvertible(label.to_string()));
            }
            seen[p] = true;
        }
        if scalars.len() != n || scalars.iter().any(Scalar::is_zero) {
            return Err(GeomError::NotInvertible(label.to_string()));
        }
        Ok(MonomialAction { label: label.to_string(), perm, scalars })
    }

    pub fn permutation(label: &str, ring: &Ring, perm: Vec<usize>) -> Result<Self, GeomError> {
        let ones = vec![ring.field().one(); perm.len()];
        Self::new(label, perm, ones)
    }

    pub fn identity(ring: &Ring) -> Self {
        let n = ring.nvars();
        MonomialAction { label: "e".into(), perm: (0..n).collect(), scalars: vec![ring.field().one(); n] }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scalars(&self) -> &[Scalar] {
        &self.scalars
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.scalars.iter().all(Scalar::is_one)
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    /// The point map `self . other`.
    pub fn compose(&self, other: &MonomialAction) -> MonomialAction {
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let scalars = self.scalars.iter().zip(&self.perm).map(|(c, &p)| c * &other.scalars[p]).collect();
        MonomialAction { label: format!("{}*{}", self.label, other.label), perm, scalars }
    }

    pub fn inverse(&self) -> MonomialAction {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut scalars = vec![self.scalars[0].zero_like(); n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            scalars[self.perm[i]] = self.scalars[i].inv();
        }
        MonomialAction { label: format!("{}^-1", self.label), perm, scalars }
    }

    fn images(&self, ring: &Ring) -> Vec<MultiPoly> {
        self.perm.iter().zip(&self.scalars).map(|(&p, c)| MultiPoly::var(ring, p).scale(c)).collect()
    }

    /// `f(sigma x)`.
    pub fn apply_poly(&self, f: &MultiPoly) -> Result<MultiPoly, GeomError> {
        let ring = f.ring();
        if ring.nvars() != self.perm.len() {
            return Err(GeomError::CoordinateCount { expected: self.perm.len(), got: ring.nvars() });
        }
        Ok(f.substitute(ring, &self.images(ring))?)
    }

    pub fn apply_rf(&self, f: &RationalFunction) -> Result<RationalFunction, GeomError> {
        let ring = f.ring();
        let imgs: Vec<RationalFunction> = self.images(ring).into_iter().map(RationalFunction::from_poly).collect();
        Ok(mp_substitute(f.num(), ring, &imgs)?.checked_div(&mp_substitute(f.den(), ring, &imgs)?)?)
    }

    /// Coordinates of `sigma . phi` from those of `phi`.
    pub fn after(&self, coords: &[RationalFunction]) -> Vec<RationalFunction> {
        self.perm
            .iter()
            .zip(&self.scalars)
            .map(|(&p, c)| coords[p].checked_mul(&RationalFunction::constant(coords[p].ring(), c.clone())).expect("same ring"))
            .collect()
    }

    /// Every generator of the ideal is mapped into the ideal.
    pub fn preserves(&self, v: &VarietyDescriptor) -> Result<bool, GeomError> {
        for g in v.generators() {
            if !v.vanishes(&self.apply_poly(g)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for MonomialAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

/// `phi . sigma_src = sigma_tgt . phi` for every pair, modulo the source ideal.
pub fn check_equivariant(phi: &RationalMapDescriptor, pairs: &[(MonomialAction, MonomialAction)]) -> Result<Certificate, GeomError> {
    let mut cert = Certificate::new(format!("equivariant {}", phi.name()));
    let (src, tgt) = (phi.source(), phi.target());
    for (s, t) in pairs {
        if !s.preserves(src)? {
            cert.fail(format!("{} does not preserve {}", s.label, src.name()));
            continue;
        }
        if !t.preserves(tgt)? {
            cert.fail(format!("{} does not preserve {}", t.label, tgt.name()));
            continue;
        }
        let lhs = phi.coords().iter().map(|c| s.apply_rf(c)).collect::<Result<Vec<_>, _>>()?;
        let rhs = t.after(phi.coords());
        let sub = maps_agree(src, tgt.is_projective(), &lhs, &rhs, &format!("element {}", s.label))?;
        if sub.passed {
            cert.record(format!("element {} commutes", s.label));
        } else {
            cert.absorb(sub);
        }
    }
    if pairs.is_empty() {
        cert.record("no group elements");
    }
    Ok(cert)
}
