use super::{QuadError, QuadraticForm};
use crate::arith::{FieldKind, Scalar};
use crate::cert::Certificate;

#[derive(Clone, Debug)]
pub struct Smoothness {
    pub smooth: bool,
    /// `det` away from characteristic 2, `radical` in characteristic 2.
    pub branch: &'static str,
    pub determinant: Scalar,
    pub radical: Vec<Vec<Scalar>>,
    /// A singular point over the base field, when one was found.
    pub singular_point: Option<Vec<Scalar>>,
    pub certificate: Certificate,
}

fn show(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// The singular points of `q = 0` are the radical vectors of `b` with `q = 0`.
/// Away from characteristic 2 every radical vector has `q = b(v,v)/2 = 0`,
/// so smoothness is `det b != 0`. In characteristic 2, `q` restricted to the
/// radical is additive and Frobenius-semilinear, so over the algebraic
/// closure it has a nonzero zero iff the radical has dimension at least 2,
/// or dimension 1 with `q(v) = 0`.
pub fn is_smooth_quadric(q: &QuadraticForm) -> Result<Smoothness, QuadError> {
    if q.dim() < 2 {
        return Err(QuadError::DimensionMismatch { expected: 2, got: q.dim() });
    }
    let b = q.bilinearize();
    let det = b.determinant();
    let radical = b.kernel();
    let mut cert = Certificate::new(format!("smooth quadric over {}", q.field()));
    let char2 = q.field().characteristic() == 2;
    let branch = if char2 { "radical" } else { "det" };
    let mut singular_point = None;
    cert.record(format!("det b = {det}"));
    if !char2 {
        if det.is_zero() {
            singular_point = radical.first().cloned();
        }
        let witness = singular_point.as_deref().map(show).unwrap_or_default();
        cert.require(!det.is_zero(), "bilinear form nondegenerate", format!("det b = 0, singular at {witness}"));
    } else {
        let values = radical.iter().map(|v| q.eval(v)).collect::<Result<Vec<_>, _>>()?;
        for (v, qv) in radical.iter().zip(&values) {
            cert.record(format!("radical vector {} with q = {qv}", show(v)));
        }
        match radical.len() {
            0 => cert.record("radical is zero"),
            1 if !values[0].is_zero() => cert.record("the radical line misses the quadric"),
            1 => {
                singular_point = Some(radical[0].clone());
                cert.fail(format!("singular at {}", show(&radical[0])));
            }
            r => {
                singular_point = radical_zero(q.field(), &radical, &values);
                let at = singular_point.as_deref().map_or_else(|| "a point over the algebraic closure".to_string(), show);
                cert.fail(format!("radical of dimension {r}; singular at {at}"));
            }
        }
    }
    Ok(Smoothness { smooth: cert.passed, branch, determinant: det, radical, singular_point, certificate: cert })
}

/// Over `GF(2)`, `q(v) in {0, 1}` and `q` is additive on the radical, so a
/// zero among `v1, v2, v1 + v2` always exists.
fn radical_zero(field: &FieldKind, radical: &[Vec<Scalar>], values: &[Scalar]) -> Option<Vec<Scalar>> {
    if let Some(k) = values.iter().position(Scalar::is_zero) {
        return Some(radical[k].clone());
    }
    if field != &FieldKind::Prime(2) {
        return None;
    }
    Some(radical[0].iter().zip(&radical[1]).map(|(a, b)| a + b).collect())
}
