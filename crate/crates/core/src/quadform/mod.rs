//! Quadratic forms in every characteristic: smoothness, twisted forms from
//! étale trace data, Springer descent and stereographic parametrization.

mod smooth;
mod springer;
mod stereo;
mod twist;

use std::fmt;

use thiserror::Error;

use crate::arith::{ArithError, FieldKind, Matrix, Scalar, UniPoly};
use crate::geom::GeomError;
use crate::mpoly::{Monomial, MultiPoly, PolyError, Ring};

pub use smooth::{is_smooth_quadric, Smoothness};
pub use springer::{
    branch_two_instance, isotropic_vectors, normalize_point, search_branch_two_instance, springer_descend, DescentBranch, DescentOutcome,
    PlantedInstance,
};
pub use stereo::{stereographic_param, Parametrization};
pub use twist::{degree3_point, split_congruence, twist_form, TwistData};

#[derive(Debug, Error)]
pub enum QuadError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("{what} has degree {got}, expected {expected}")]
    WrongDegree { what: String, expected: usize, got: usize },
    #[error("dimension {got} does not match the form's {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is not a quadratic form")]
    NotQuadratic(String),
    #[error("point is not on the quadric: q = {0}")]
    NotOnQuadric(String),
    #[error("the zero vector is not a point")]
    ZeroVector,
    #[error("descent from degree {0} is not supported")]
    UnsupportedDegree(usize),
    #[error("{0} is singular on the quadric")]
    SingularPoint(String),
    #[error("needs characteristic 0, got {0}")]
    Characteristic(u64),
    #[error("descent produced an invalid point: {0}")]
    Certification(String),
}

/// `q(x) = sum_{i <= j} a_ij x_i x_j`, stored as an upper-triangular matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm {
    field: FieldKind,
    coeffs: Vec<Vec<Scalar>>,
}

impl QuadraticForm {
    pub fn zero(field: &FieldKind, n: usize) -> Self {
        QuadraticForm { field: field.clone(), coeffs: vec![vec![field.zero(); n]; n] }
    }

    /// From a full coefficient table; entries below the diagonal are folded
    /// into the upper triangle.
    pub fn from_table(field: &FieldKind, table: &[Vec<Scalar>]) -> Result<Self, QuadError> {
        let n = table.len();
        let mut q = Self::zero(field, n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(QuadError::DimensionMismatch { expected: n, got: row.len() });
            }
            for (j, c) in row.iter().enumerate() {
                q.add_coeff(i, j, &field.embed(c)?);
            }
        }
        Ok(q)
    }

    pub fn diagonal(field: &FieldKind, entries: &[i64]) -> Self {
        let mut q = Self::zero(field, entries.len());
        for (i, &e) in entries.iter().enumerate() {
            q.coeffs[i][i] = field.from_i64(e);
        }
        q
    }

    /// Reads a homogeneous quadratic polynomial.
    pub fn from_poly(p: &MultiPoly) -> Result<Self, QuadError> {
        let n = p.ring().nvars();
        let mut q = Self::zero(p.field(), n);
        for (m, c) in p.terms() {
            let vars: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat_n(i, m.exps()[i] as usize)).collect();
            match vars[..] {
                [i, j] => q.add_coeff(i, j, c),
                _ => return Err(QuadError::NotQuadratic(p.to_string())),
            }
        }
        Ok(q)
    }

    fn add_coeff(&mut self, i: usize, j: usize, c: &Scalar) {
        let (i, j) = (i.min(j), i.max(j));
        self.coeffs[i][j] = &self.coeffs[i][j] + c;
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> &FieldKind {
        &self.field
    }

    /// `a_ij` for `i <= j`; zero below the diagonal.
    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i][j]
    }

    pub fn upper_matrix(&self) -> Matrix<Scalar> {
        Matrix::from_rows(self.coeffs.clone(), &self.field.one())
    }

    /// `b(x, y) = q(x + y) - q(x) - q(y)`: `a_ij` off the diagonal, `2 a_ii` on it.
    pub fn bilinearize(&self) -> Matrix<Scalar> {
        let n = self.dim();
        let mut b = Matrix::zeros(n, n, &self.field.one());
        for i in 0..n {
            for j in i..n {
                let c = &self.coeffs[i][j];
                if i == j {
                    b.set(i, i, c + c);
                } else {
                    b.set(i, j, c.clone());
                    b.set(j, i, c.clone());
                }
            }
        }
        b
    }

    /// Reduces or embeds the coefficients into `field`.
    pub fn base_change(&self, field: &FieldKind) -> Result<Self, QuadError> {
        let coeffs = self.coeffs.iter().map(|row| row.iter().map(|c| field.embed(c)).collect::<Result<Vec<_>, _>>()).collect::<Result<_, _>>()?;
        Ok(QuadraticForm { field: field.clone(), coeffs })
    }

    /// Evaluates at a vector over this field or an extension of it.
    pub fn eval(&self, x: &[Scalar]) -> Result<Scalar, QuadError> {
        if x.len() != self.dim() {
            return Err(QuadError::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        let k = x.first().map_or(self.field.clone(), Scalar::field);
        let mut acc = k.zero();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let c = &self.coeffs[i][j];
                if c.is_zero() {
                    continue;
                }
                let t = k.embed(c)?.checked_mul(&x[i])?.checked_mul(&x[j])?;
                acc = acc.checked_add(&t)?;
            }
        }
        Ok(acc)
    }

    /// `b(x, y)` for vectors over this field or an extension.
    pub fn polar(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar, QuadError> {
        let sum: Vec<Scalar> = x.iter().zip(y).map(|(a, b)| a.checked_add(b)).collect::<Result<_, _>>()?;
        Ok(self.eval(&sum)?.checked_sub(&self.eval(x)?)?.checked_sub(&self.eval(y)?)?)
    }

    /// `q(P(x))` for polynomial coordinates over the rationals.
    pub fn eval_univariate(&self, p: &[UniPoly]) -> Result<UniPoly, QuadError> {
        if p.len() != self.dim() {
            return Err(QuadError::DimensionMismatch { expected: self.dim(), got: p.len() });
        }
        let mut acc = UniPoly::zero(FieldKind::Rational);
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let c = &self.coeffs[i][j];
                if !c.is_zero() {
                    acc = &acc + &(&p[i] * &p[j]).scale(c);
                }
            }
        }
        Ok(acc)
    }

    pub fn to_poly(&self, ring: &Ring) -> Result<MultiPoly, QuadError> {
        if ring.nvars() != self.dim() {
            return Err(QuadError::DimensionMismatch { expected: self.dim(), got: ring.nvars() });
        }
        let mut terms = Vec::new();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let mut e = vec![0u32; self.dim()];
                e[i] += 1;
                e[j] += 1;
                terms.push((Monomial::new(e), ring.field().embed(&self.coeffs[i][j])?));
            }
        }
        Ok(MultiPoly::from_terms(ring, terms))
    }

    /// Coefficients of `q(M y)` for `M` with entries in a polynomial ring.
    pub fn pullback(&self, m: &[Vec<MultiPoly>]) -> Result<Vec<Vec<MultiPoly>>, QuadError> {
        let n = self.dim();
        if m.len() != n {
            return Err(QuadError::DimensionMismatch { expected: n, got: m.len() });
        }
        let cols = m[0].len();
        let ring = m[0][0].ring().clone();
        let mut out = vec![vec![MultiPoly::zero(&ring); cols]; cols];
        for i in 0..n {
            for j in i..n {
                let c = ring.field().embed(&self.coeffs[i][j])?;
                if c.is_zero() {
                    continue;
                }
                for k in 0..cols {
                    for l in k..cols {
                        let t = if k == l { &m[i][k] * &m[j][k] } else { &(&m[i][k] * &m[j][l]) + &(&m[i][l] * &m[j][k]) };
                        out[k][l] = &out[k][l] + &t.scale(&c);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.coeffs.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// `Z1 Z2 + Y2 Y3 + Y1 Y3 + Y1 Y2` in the order `Y1, Y2, Y3, Z1, Z2`.
pub fn lambda4_form(field: &FieldKind) -> QuadraticForm {
    let mut q = QuadraticForm::zero(field, 5);
    for (i, j) in [(0, 1), (0, 2), (1, 2), (3, 4)] {
        q.coeffs[i][j] = field.one();
    }
    q
}
