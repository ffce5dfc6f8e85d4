use std::fmt;
use std::sync::Arc;

use super::variety::VarietyDescriptor;
use super::GeomError;
use crate::cert::Certificate;
use crate::mpoly::{mp_substitute, MultiPoly, RationalFunction};

/// A rational map given by one coordinate representative.
///
/// Coordinates are rational functions on the source ring. For a projective
/// target they are stored as polynomials with common denominators cleared.
#[derive(Clone, Debug)]
pub struct RationalMapDescriptor {
    name: String,
    source: Arc<VarietyDescriptor>,
    target: Arc<VarietyDescriptor>,
    coords: Vec<RationalFunction>,
}

pub(crate) fn same_variety(a: &VarietyDescriptor, b: &VarietyDescriptor) -> bool {
    a.name() == b.name() && a.ambient() == b.ambient() && a.ring() == b.ring()
}

/// Multiplies through by the product of the distinct denominators.
pub fn clear_denominators(coords: &[RationalFunction]) -> Vec<MultiPoly> {
    let Some(first) = coords.first() else { return Vec::new() };
    let mut dens: Vec<MultiPoly> = Vec::new();
    for c in coords {
        if !c.den().is_constant() && !dens.contains(c.den()) {
            dens.push(c.den().clone());
        }
    }
    let total = dens.iter().fold(MultiPoly::one(first.ring()), |acc, d| &acc * d);
    coords
        .iter()
        .map(|c| {
            let scale = total.div_exact(c.den()).expect("denominator divides the product");
            c.num() * &scale
        })
        .collect()
}

impl RationalMapDescriptor {
    pub fn new(
        name: &str,
        source: &Arc<VarietyDescriptor>,
        target: &Arc<VarietyDescriptor>,
        coords: Vec<RationalFunction>,
    ) -> Result<Self, GeomError> {
        if coords.len() != target.ncoords() {
            return Err(GeomError::CoordinateCount { expected: target.ncoords(), got: coords.len() });
        }
        if let Some(c) = coords.iter().find(|c| c.ring() != source.ring()) {
            return Err(GeomError::WrongRing(c.to_string()));
        }
        for c in &coords {
            if source.vanishes(c.den())? {
                return Err(GeomError::Degenerate(format!("denominator {} vanishes on {}", c.den(), source.name())));
            }
        }
        let coords = if target.is_projective() {
            let polys = clear_denominators(&coords);
            let degs: Vec<u32> = polys.iter().filter_map(MultiPoly::total_degree).collect();
            let graded = polys.iter().all(MultiPoly::is_homogeneous) && degs.windows(2).all(|w| w[0] == w[1]);
            if source.is_projective() && !graded {
                return Err(GeomError::NotHomogeneous(name.to_string()));
            }
            let mut all_vanish = true;
            for p in &polys {
                if !source.vanishes(p)? {
                    all_vanish = false;
                    break;
                }
            }
            if all_vanish {
                return Err(GeomError::Degenerate(format!("every coordinate of {name} vanishes on {}", source.name())));
            }
            polys.into_iter().map(RationalFunction::from_poly).collect()
        } else {
            if source.is_projective() {
                for c in &coords {
                    let balanced = c.num().is_zero()
                        || (c.num().is_homogeneous() && c.den().is_homogeneous() && c.num().total_degree() == c.den().total_degree());
                    if !balanced {
                        return Err(GeomError::NotHomogeneous(c.to_string()));
                    }
                }
            }
            coords
        };
        Ok(RationalMapDescriptor { name: name.to_string(), source: source.clone(), target: target.clone(), coords })
    }

    pub fn from_polys(name: &str, source: &Arc<VarietyDescriptor>, target: &Arc<VarietyDescriptor>, coords: Vec<MultiPoly>) -> Result<Self, GeomError> {
        Self::new(name, source, target, coords.into_iter().map(RationalFunction::from_poly).collect())
    }

    /// Coordinates as `(numerator, denominator)` polynomial text.
    pub fn parse(name: &str, source: &Arc<VarietyDescriptor>, target: &Arc<VarietyDescriptor>, coords: &[(&str, &str)]) -> Result<Self, GeomError> {
        let ring = source.ring();
        let mut out = Vec::with_capacity(coords.len());
        for (n, d) in coords {
            out.push(RationalFunction::new(MultiPoly::parse(ring, n)?, MultiPoly::parse(ring, d)?)?);
        }
        Self::new(name, source, target, out)
    }

    pub fn identity(v: &Arc<VarietyDescriptor>) -> Self {
        let coords = (0..v.ncoords()).map(|i| RationalFunction::var(v.ring(), i)).collect();
        RationalMapDescriptor { name: format!("id_{}", v.name()), source: v.clone(), target: v.clone(), coords }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<VarietyDescriptor> {
        &self.source
    }

    pub fn target(&self) -> &Arc<VarietyDescriptor> {
        &self.target
    }

    pub fn coords(&self) -> &[RationalFunction] {
        &self.coords
    }

    /// Pullback of a polynomial on the target ambient space.
    pub fn pullback(&self, g: &MultiPoly) -> Result<RationalFunction, GeomError> {
        Ok(mp_substitute(g, self.source.ring(), &self.coords)?)
    }
}

impl fmt::Display for RationalMapDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.target.is_projective() { " : " } else { ", " };
        let cs: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "{}: {} -> {}, ({})", self.name, self.source.name(), self.target.name(), cs.join(sep))
    }
}

fn abbreviate(p: &MultiPoly) -> String {
    let s = p.to_string();
    if s.len() > 160 {
        format!("{}... ({} terms)", &s[..s.char_indices().take_while(|(i, _)| *i < 120).last().map_or(0, |(i, c)| i + c.len_utf8())], p.num_terms())
    } else {
        s
    }
}

/// Every generator of the target ideal pulls back into the source ideal.
pub fn check_well_defined(phi: &RationalMapDescriptor) -> Result<Certificate, GeomError> {
    let mut cert = Certificate::new(format!("well-defined {}", phi.name));
    for (k, g) in phi.target.generators().iter().enumerate() {
        let pulled = phi.pullback(g)?;
        let rem = phi.source.normal_form(pulled.num())?;
        cert.require(
            rem.is_zero(),
            format!("target generator {} pulls back to 0 mod I({})", k + 1, phi.source.name()),
            format!("target generator {g} pulls back to nonzero remainder {}", abbreviate(&rem)),
        );
    }
    if phi.target.generators().is_empty() {
        cert.record("target ideal is zero");
    }
    Ok(cert)
}

/// `phi` then `psi`.
pub fn compose(phi: &RationalMapDescriptor, psi: &RationalMapDescriptor) -> Result<RationalMapDescriptor, GeomError> {
    if !same_variety(&phi.target, &psi.source) {
        return Err(GeomError::VarietyMismatch { left: phi.target.name().to_string(), right: psi.source.name().to_string() });
    }
    let ring = phi.source.ring();
    let mut coords = Vec::with_capacity(psi.coords.len());
    for c in &psi.coords {
        let n = mp_substitute(c.num(), ring, &phi.coords)?;
        let d = mp_substitute(c.den(), ring, &phi.coords)?;
        if d.is_zero() {
            return Err(GeomError::Degenerate(format!("denominator {} pulls back to zero", c.den())));
        }
        coords.push(n.checked_div(&d)?);
    }
    RationalMapDescriptor::new(&format!("{} . {}", psi.name, phi.name), &phi.source, &psi.target, coords)
}

/// Decides whether two coordinate tuples define the same map on `source`.
///
/// Projective targets: every 2x2 minor `f_i g_j - f_j g_i` vanishes on the
/// source. Affine targets: every difference `f_i - g_i` does.
pub fn maps_agree(
    source: &VarietyDescriptor,
    projective_target: bool,
    f: &[RationalFunction],
    g: &[RationalFunction],
    label: &str,
) -> Result<Certificate, GeomError> {
    let mut cert = Certificate::new(label.to_string());
    if f.len() != g.len() {
        cert.fail(format!("coordinate counts differ: {} vs {}", f.len(), g.len()));
        return Ok(cert);
    }
    if projective_target {
        let fp = clear_denominators(f);
        let gp = clear_denominators(g);
        let mut checked = 0;
        for i in 0..fp.len() {
            for j in i + 1..fp.len() {
                let minor = &(&fp[i] * &gp[j]) - &(&fp[j] * &gp[i]);
                let rem = source.normal_form(&minor)?;
                if !rem.is_zero() {
                    cert.fail(format!("minor ({}, {}) has remainder {}", i + 1, j + 1, abbreviate(&rem)));
                    return Ok(cert);
                }
                checked += 1;
            }
        }
        cert.record(format!("{checked} minors reduce to 0 mod I({})", source.name()));
    } else {
        for (i, (a, b)) in f.iter().zip(g).enumerate() {
            let diff = &(a.num() * b.den()) - &(b.num() * a.den());
            let rem = source.normal_form(&diff)?;
            if !rem.is_zero() {
                cert.fail(format!("coordinate {} differs by remainder {}", i + 1, abbreviate(&rem)));
                return Ok(cert);
            }
        }
        cert.record(format!("{} coordinate differences reduce to 0 mod I({})", f.len(), source.name()));
    }
    Ok(cert)
}

/// `psi . phi = id` on the source of `phi` and `phi . psi = id` on its target.
pub fn check_birational_pair(phi: &RationalMapDescriptor, psi: &RationalMapDescriptor) -> Result<Certificate, GeomError> {
    let mut cert = Certificate::new(format!("birational {} / {}", phi.name, psi.name));
    if !same_variety(&phi.target, &psi.source) || !same_variety(&psi.target, &phi.source) {
        cert.fail(format!("{} and {} are not mutually composable", phi.name, psi.name));
        return Ok(cert);
    }
    cert.absorb(check_well_defined(phi)?);
    cert.absorb(check_well_defined(psi)?);
    for (a, b) in [(phi, psi), (psi, phi)] {
        let label = format!("{} . {} = id", b.name, a.name);
        match compose(a, b) {
            Ok(c) => {
                let id = RationalMapDescriptor::identity(&a.source);
                cert.absorb(maps_agree(&a.source, a.source.is_projective(), &c.coords, &id.coords, &label)?);
            }
            Err(GeomError::Degenerate(why)) => cert.fail(format!("{label}: {why}")),
            Err(e) => return Err(e),
        }
    }
    Ok(cert)
}
