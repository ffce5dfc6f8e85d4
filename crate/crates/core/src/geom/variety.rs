use std::fmt;

use super::GeomError;
use crate::mpoly::{IdealBasis, MultiPoly, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    Affine,
    Projective,
}

/// A closed subvariety of affine or projective space, given by its ideal.
#[derive(Clone, Debug)]
pub struct VarietyDescriptor {
    name: String,
    ambient: Ambient,
    ideal: IdealBasis,
}

impl VarietyDescriptor {
    pub fn affine(name: &str, ring: &Ring, generators: Vec<MultiPoly>) -> Result<Self, GeomError> {
        Self::build(name, Ambient::Affine, ring, generators)
    }

    /// Generators must be homogeneous.
    pub fn projective(name: &str, ring: &Ring, generators: Vec<MultiPoly>) -> Result<Self, GeomError> {
        if let Some(g) = generators.iter().find(|g| !g.is_homogeneous()) {
            return Err(GeomError::NotHomogeneous(g.to_string()));
        }
        Self::build(name, Ambient::Projective, ring, generators)
    }

    /// Convenience constructor from polynomial text.
    pub fn parse(name: &str, ambient: Ambient, ring: &Ring, generators: &[&str]) -> Result<Self, GeomError> {
        let gens = generators.iter().map(|g| MultiPoly::parse(ring, g)).collect::<Result<Vec<_>, _>>()?;
        match ambient {
            Ambient::Affine => Self::affine(name, ring, gens),
            Ambient::Projective => Self::projective(name, ring, gens),
        }
    }

    fn build(name: &str, ambient: Ambient, ring: &Ring, generators: Vec<MultiPoly>) -> Result<Self, GeomError> {
        let ideal = IdealBasis::new(ring, generators);
        if !ideal.is_proper()? {
            return Err(GeomError::EmptyVariety(name.to_string()));
        }
        Ok(VarietyDescriptor { name: name.to_string(), ambient, ideal })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_projective(&self) -> bool {
        self.ambient == Ambient::Projective
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &IdealBasis {
        &self.ideal
    }

    pub fn generators(&self) -> &[MultiPoly] {
        self.ideal.generators()
    }

    /// Number of coordinates of the ambient space.
    pub fn ncoords(&self) -> usize {
        self.ring().nvars()
    }

    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly, GeomError> {
        Ok(self.ideal.normal_form(f)?)
    }

    pub fn vanishes(&self, f: &MultiPoly) -> Result<bool, GeomError> {
        Ok(self.ideal.contains(f)?)
    }
}

impl fmt::Display for VarietyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let space = match self.ambient {
            Ambient::Affine => "A",
            Ambient::Projective => "P",
        };
        let dim = match self.ambient {
            Ambient::Affine => self.ncoords(),
            Ambient::Projective => self.ncoords() - 1,
        };
        let gens: Vec<String> = self.generators().iter().map(ToString::to_string).collect();
        write!(f, "{} = V({}) in {space}^{dim}({})", self.name, gens.join(", "), self.ring().vars().join(", "))
    }
}
