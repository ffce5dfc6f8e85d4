use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::variety::VarietyDescriptor;
use super::GeomError;
use crate::arith::IntMatrix;
use crate::cert::Certificate;
use crate::mpoly::{laurent_kernel_lattice, mp_substitute, LatticeIndex, MultiPoly, RationalFunction};

/// Claimed generators of the torus-invariant function field of an affine chart.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub chart: Arc<VarietyDescriptor>,
    /// One column per chart coordinate.
    pub weights: IntMatrix,
    /// Named Laurent monomials in the chart coordinates.
    pub invariants: Vec<(String, RationalFunction)>,
    /// Polynomials in the invariant names that should vanish on the chart.
    pub relations: Vec<MultiPoly>,
    /// `x_i = expr`, with `expr` over the chart coordinates followed by the invariant names.
    pub recovery: Vec<(usize, RationalFunction)>,
}

/// Exponent vector of a Laurent monomial `c * x^a / x^b`.
pub fn laurent_exponent(f: &RationalFunction) -> Option<Vec<i64>> {
    if f.num().num_terms() != 1 || f.den().num_terms() != 1 {
        return None;
    }
    let (a, _) = f.num().leading_term()?;
    let (b, _) = f.den().leading_term()?;
    Some(a.exps().iter().zip(b.exps()).map(|(&x, &y)| i64::from(x) - i64::from(y)).collect())
}

pub fn quotient_generators_check(data: &QuotientData) -> Result<Certificate, GeomError> {
    let mut cert = Certificate::new("quotient generators");
    let ring = data.chart.ring();
    let names: Vec<&str> = data.invariants.iter().map(|(n, _)| n.as_str()).collect();

    let mut exps = Vec::new();
    for (name, f) in &data.invariants {
        let Some(e) = laurent_exponent(f) else {
            cert.fail(format!("{name} = {f} is not a Laurent monomial"));
            return Ok(cert);
        };
        let w = data.weights.mul_vec(&e.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        let zero = w.iter().all(Zero::is_zero);
        let ws: Vec<String> = w.iter().map(ToString::to_string).collect();
        cert.require(zero, format!("{name} has weight 0"), format!("{name} = {f} has weight ({})", ws.join(",")));
        exps.push(e);
    }
    if !cert.passed {
        return Ok(cert);
    }

    let lattice = laurent_kernel_lattice(&data.weights);
    match lattice.index_of(&exps) {
        LatticeIndex::Finite(i) if i.is_one() => {
            cert.record(format!("exponents span the rank-{} invariant lattice with index 1", lattice.rank()));
        }
        LatticeIndex::Finite(i) => cert.fail(format!("exponents span a sublattice of index {i}")),
        LatticeIndex::Infinite { rank, needed } => cert.fail(format!("exponents span rank {rank}, lattice has rank {needed}")),
        LatticeIndex::NotInLattice(k) => cert.fail(format!("{} is not torus-invariant", names[k])),
    }
    if !cert.passed {
        return Ok(cert);
    }

    let images: Vec<RationalFunction> = data.invariants.iter().map(|(_, f)| f.clone()).collect();
    for rel in &data.relations {
        if rel.ring().nvars() != images.len() {
            cert.fail(format!("relation {rel} is not over the {} invariants", images.len()));
            continue;
        }
        let pulled = mp_substitute(rel, ring, &images)?;
        let rem = data.chart.normal_form(pulled.num())?;
        cert.require(rem.is_zero(), format!("relation {rel} holds on {}", data.chart.name()), format!("relation {rel} leaves remainder {rem}"));
    }

    let mut mixed: Vec<RationalFunction> = (0..ring.nvars()).map(|i| RationalFunction::var(ring, i)).collect();
    mixed.extend(images);
    for (i, expr) in &data.recovery {
        if expr.ring().nvars() != mixed.len() {
            cert.fail(format!("recovery expression {expr} has the wrong variables"));
            continue;
        }
        let n = mp_substitute(expr.num(), ring, &mixed)?;
        let d = mp_substitute(expr.den(), ring, &mixed)?;
        let value = n.checked_div(&d)?;
        let x = MultiPoly::var(ring, *i);
        let diff = &(&x * value.den()) - value.num();
        let rem = data.chart.normal_form(&diff)?;
        let name = &ring.vars()[*i];
        cert.require(rem.is_zero(), format!("{name} = {expr} on {}", data.chart.name()), format!("{name} = {expr} fails with remainder {rem}"));
    }
    Ok(cert)
}
