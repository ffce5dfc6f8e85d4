//! The seven-dimensional quadric, its torus chart, and the chain of
//! birational models Λ1 (affine), Λ2 (projective closure), Λ3 (Z0
//! eliminated) and Λ4 (Cremona image).

use std::sync::Arc;

use super::action::MonomialAction;
use super::map::RationalMapDescriptor;
use super::quotient::QuotientData;
use super::variety::{Ambient, VarietyDescriptor};
use super::GeomError;
use crate::arith::{FieldKind, IntMatrix};
use crate::mpoly::{MultiPoly, PolyRing, RationalFunction};

pub const MODEL_COORDS: [&str; 5] = ["y1", "y2", "y3", "z1", "z2"];
pub const CHART_COORDS: [&str; 6] = ["x1", "x2", "x3", "x5", "x6", "x7"];

/// `y1 = x1 x7, y2 = x2 x6, y3 = x3 x5, z1 = x1 x5 x6, z2 = x2 x3 x7`.
pub const INVARIANT_MONOMIALS: [(&str, &str); 5] =
    [("y1", "x1*x7"), ("y2", "x2*x6"), ("y3", "x3*x5"), ("z1", "x1*x5*x6"), ("z2", "x2*x3*x7")];

pub fn quadric() -> Result<VarietyDescriptor, GeomError> {
    let ring = PolyRing::indexed("X", 7, FieldKind::Rational);
    VarietyDescriptor::parse("Q", Ambient::Projective, &ring, &["X1*X7 + X2*X6 + X3*X5 + X4^2"])
}

/// `X4 != 0` chart with `x_i = X_i / X4`.
pub fn quadric_chart() -> Result<VarietyDescriptor, GeomError> {
    let ring = PolyRing::new(&CHART_COORDS, FieldKind::Rational);
    VarietyDescriptor::parse("Qaff", Ambient::Affine, &ring, &["x1*x7 + x2*x6 + x3*x5 + 1"])
}

/// Torus weights of the chart coordinates, one column each.
pub fn chart_weights() -> IntMatrix {
    IntMatrix::from_cols(&[vec![1, 0], vec![0, 1], vec![1, -1], vec![-1, 1], vec![0, -1], vec![-1, 0]])
}

pub fn invariant_functions(chart: &VarietyDescriptor) -> Result<Vec<(String, RationalFunction)>, GeomError> {
    INVARIANT_MONOMIALS
        .iter()
        .map(|(n, m)| Ok((n.to_string(), RationalFunction::from_poly(MultiPoly::parse(chart.ring(), m)?))))
        .collect()
}

pub fn quotient_data() -> Result<QuotientData, GeomError> {
    let chart = Arc::new(quadric_chart()?);
    let invariants = invariant_functions(&chart)?;
    let model = PolyRing::new(&MODEL_COORDS, FieldKind::Rational);
    let relations = vec![MultiPoly::parse(&model, "y1 + y2 + y3 + 1")?, MultiPoly::parse(&model, "y1*y2*y3 - z1*z2")?];
    let mixed_names: Vec<&str> = CHART_COORDS.iter().chain(MODEL_COORDS.iter()).copied().collect();
    let mixed = PolyRing::new(&mixed_names, FieldKind::Rational);
    let rf = |n: &str, d: &str| -> Result<RationalFunction, GeomError> {
        Ok(RationalFunction::new(MultiPoly::parse(&mixed, n)?, MultiPoly::parse(&mixed, d)?)?)
    };
    let recovery = vec![
        (5, rf("y1", "x1")?),
        (4, rf("y2", "x2")?),
        (3, rf("z1*x2", "x1*y2")?),
        (2, rf("y3*x1*y2", "z1*x2")?),
    ];
    Ok(QuotientData { chart, weights: chart_weights(), invariants, relations, recovery })
}

/// The varieties and maps of the chain, built once.
#[derive(Clone, Debug)]
pub struct LambdaChain {
    pub chart: Arc<VarietyDescriptor>,
    pub lambda1: Arc<VarietyDescriptor>,
    pub lambda2: Arc<VarietyDescriptor>,
    pub lambda3: Arc<VarietyDescriptor>,
    pub lambda4: Arc<VarietyDescriptor>,
    pub quotient: RationalMapDescriptor,
    pub l1_to_l2: RationalMapDescriptor,
    pub l2_to_l1: RationalMapDescriptor,
    pub l2_to_l3: RationalMapDescriptor,
    pub l3_to_l2: RationalMapDescriptor,
    pub cremona_34: RationalMapDescriptor,
    pub cremona_43: RationalMapDescriptor,
}

/// One link of the chain: forward map, backward map.
pub struct Link<'a> {
    pub name: &'static str,
    pub forward: &'a RationalMapDescriptor,
    pub backward: &'a RationalMapDescriptor,
}

/// `P / x_i` with `P = Y1 Y2 Y3 Z1 Z2`.
const CREMONA: [&str; 5] = ["Y2*Y3*Z1*Z2", "Y1*Y3*Z1*Z2", "Y1*Y2*Z1*Z2", "Y1*Y2*Y3*Z2", "Y1*Y2*Y3*Z1"];

impl LambdaChain {
    pub fn build() -> Result<Self, GeomError> {
        let q = FieldKind::Rational;
        let r1 = PolyRing::new(&MODEL_COORDS, q.clone());
        let r2 = PolyRing::new(&["Y1", "Y2", "Y3", "Z0", "Z1", "Z2"], q.clone());
        let r3 = PolyRing::new(&["Y1", "Y2", "Y3", "Z1", "Z2"], q);
        let chart = Arc::new(quadric_chart()?);
        let lambda1 = Arc::new(VarietyDescriptor::parse("Lambda1", Ambient::Affine, &r1, &["y1 + y2 + y3 + 1", "y1*y2*y3 - z1*z2"])?);
        let lambda2 = Arc::new(VarietyDescriptor::parse("Lambda2", Ambient::Projective, &r2, &["Y1 + Y2 + Y3 + Z0", "Y1*Y2*Y3 - Z0*Z1*Z2"])?);
        let lambda3 = Arc::new(VarietyDescriptor::parse("Lambda3", Ambient::Projective, &r3, &["Y1*Y2*Y3 + (Y1 + Y2 + Y3)*Z1*Z2"])?);
        let lambda4 = Arc::new(VarietyDescriptor::parse("Lambda4", Ambient::Projective, &r3, &["Z1*Z2 + Y2*Y3 + Y1*Y3 + Y1*Y2"])?);

        let poly = |v: &Arc<VarietyDescriptor>, s: &str| MultiPoly::parse(v.ring(), s);
        let quotient = RationalMapDescriptor::from_polys(
            "quotient",
            &chart,
            &lambda1,
            INVARIANT_MONOMIALS.iter().map(|(_, m)| poly(&chart, m)).collect::<Result<_, _>>()?,
        )?;
        let l1_to_l2 = RationalMapDescriptor::from_polys(
            "closure",
            &lambda1,
            &lambda2,
            ["y1", "y2", "y3", "1", "z1", "z2"].iter().map(|s| poly(&lambda1, s)).collect::<Result<_, _>>()?,
        )?;
        let l2_to_l1 = RationalMapDescriptor::parse(
            "dehomogenize",
            &lambda2,
            &lambda1,
            &[("Y1", "Z0"), ("Y2", "Z0"), ("Y3", "Z0"), ("Z1", "Z0"), ("Z2", "Z0")],
        )?;
        let l2_to_l3 = RationalMapDescriptor::from_polys(
            "forget-Z0",
            &lambda2,
            &lambda3,
            ["Y1", "Y2", "Y3", "Z1", "Z2"].iter().map(|s| poly(&lambda2, s)).collect::<Result<_, _>>()?,
        )?;
        let l3_to_l2 = RationalMapDescriptor::from_polys(
            "restore-Z0",
            &lambda3,
            &lambda2,
            ["Y1", "Y2", "Y3", "-Y1 - Y2 - Y3", "Z1", "Z2"].iter().map(|s| poly(&lambda3, s)).collect::<Result<_, _>>()?,
        )?;
        let cremona = |src: &Arc<VarietyDescriptor>, tgt: &Arc<VarietyDescriptor>, name: &str| -> Result<RationalMapDescriptor, GeomError> {
            let coords = CREMONA.iter().map(|m| poly(src, m)).collect::<Result<_, _>>()?;
            RationalMapDescriptor::from_polys(name, src, tgt, coords)
        };
        let cremona_34 = cremona(&lambda3, &lambda4, "cremona34")?;
        let cremona_43 = cremona(&lambda4, &lambda3, "cremona43")?;
        Ok(LambdaChain { chart, lambda1, lambda2, lambda3, lambda4, quotient, l1_to_l2, l2_to_l1, l2_to_l3, l3_to_l2, cremona_34, cremona_43 })
    }

    pub fn links(&self) -> [Link<'_>; 3] {
        [
            Link { name: "lambda1-lambda2", forward: &self.l1_to_l2, backward: &self.l2_to_l1 },
            Link { name: "lambda2-lambda3", forward: &self.l2_to_l3, backward: &self.l3_to_l2 },
            Link { name: "lambda3-lambda4", forward: &self.cremona_34, backward: &self.cremona_43 },
        ]
    }
}

/// Transports a substitution `y_k -> y_{perm[k]}` on the five model
/// coordinates to the coordinates of `v` (Λ2 carries an extra fixed `Z0`).
pub fn model_action(label: &str, perm: &[usize; 5], v: &VarietyDescriptor) -> Result<MonomialAction, GeomError> {
    let ring = v.ring();
    match ring.nvars() {
        5 => MonomialAction::permutation(label, ring, perm.to_vec()),
        6 => {
            // model index -> Λ2 index
            let pos = [0usize, 1, 2, 4, 5];
            let mut p = vec![3usize; 6];
            for k in 0..5 {
                p[pos[k]] = pos[perm[k]];
            }
            MonomialAction::permutation(label, ring, p)
        }
        n => Err(GeomError::CoordinateCount { expected: 5, got: n }),
    }
}

/// The product `Y1 Y2 Y3 Z1 Z2` on Λ3/Λ4 coordinates.
pub fn cremona_factor(v: &VarietyDescriptor) -> Result<MultiPoly, GeomError> {
    Ok(MultiPoly::parse(v.ring(), "Y1*Y2*Y3*Z1*Z2")?)
}
