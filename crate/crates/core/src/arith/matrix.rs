//! Dense matrices over an exact field, with pivoted elimination.

use std::fmt;

use super::scalar::Scalar;
use super::ArithError;

/// The operations exact elimination needs from a coefficient field.
///
/// Implemented by [`Scalar`] and by rational functions, so the same
/// elimination runs over `QQ`, `GF(p)`, number fields and `QQ(a, b)`.
pub trait FieldElement: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn try_inv(&self) -> Result<Self, ArithError>;
}

impl FieldElement for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero_like(self)
    }
    fn one_like(&self) -> Self {
        Scalar::one_like(self)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Result<Self, ArithError> {
        self.checked_inv()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
    /// Prototype unit of the coefficient field; needed for empty shapes.
    one: F,
}

impl<F: FieldElement> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, one: &F) -> Self {
        Matrix { rows, cols, data: vec![one.zero_like(); rows * cols], one: one.clone() }
    }

    pub fn identity(n: usize, one: &F) -> Self {
        let mut m = Self::zeros(n, n, one);
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, one: &F) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect(), one: one.clone() }
    }

    pub fn from_cols(cols: Vec<Vec<F>>, nrows: usize, one: &F) -> Self {
        let mut m = Self::zeros(nrows, cols.len(), one);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length");
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn one(&self) -> &F {
        &self.one
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, &self.one);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols, &self.one);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).plus(&a.times(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).fold(self.one.zero_like(), |acc, j| acc.plus(&self.get(i, j).times(&v[j]))))
            .collect()
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.minus(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data, one: self.one.clone() }
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let rows = (0..self.rows).map(|i| self.row(i).into_iter().chain(other.row(i)).collect()).collect();
        Matrix::from_rows(rows, &self.one)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).try_inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j).times(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).minus(&factor.times(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{v : self * v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.one.zero_like(); self.cols];
                v[f] = self.one.clone();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.get(row, f).negated();
                }
                v
            })
            .collect()
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let mut det = self.one.clone();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return self.one.zero_like();
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.negated();
            }
            let pivot = m.get(c, c).clone();
            det = det.times(&pivot);
            let inv = pivot.try_inv().expect("pivot is nonzero");
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).times(&inv);
                for j in c..m.cols {
                    let v = m.get(i, j).minus(&factor.times(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(self.one.zero_like(), |acc, i| acc.plus(self.get(i, i)))
    }

    pub fn map<G: FieldElement>(&self, one: &G, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect(), one: one.clone() }
    }
}

/// Rank and kernel basis in one pass of elimination; `rank + kernel.len() == cols`.
pub fn exact_rank_and_kernel<F: FieldElement>(m: &Matrix<F>) -> (usize, Vec<Vec<F>>) {
    let kernel = m.kernel();
    (m.cols() - kernel.len(), kernel)
}

impl<F: FieldElement + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldKind;

    fn qm(rows: &[&[i64]]) -> Matrix<Scalar> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from(x)).collect()).collect(), &Scalar::from(1))
    }

    #[test]
    fn zero_and_identity() {
        let z = Matrix::zeros(3, 3, &Scalar::from(1));
        let (rank, ker) = exact_rank_and_kernel(&z);
        assert_eq!((rank, ker.len()), (0, 3));
        let id = Matrix::identity(4, &Scalar::from(1));
        assert_eq!(exact_rank_and_kernel(&id), (4, vec![]));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (rank, ker) = exact_rank_and_kernel(&m);
        assert_eq!(rank, 2);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn determinant_small() {
        assert_eq!(qm(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).determinant(), Scalar::from(2));
        assert_eq!(qm(&[&[0, 1], &[1, 0]]).determinant(), Scalar::from(-1));
    }

    #[test]
    fn rank_drops_mod_p() {
        let f3 = FieldKind::prime(3).unwrap();
        let m = Matrix::from_rows(vec![vec![f3.from_i64(1), f3.from_i64(2)], vec![f3.from_i64(2), f3.from_i64(1)]], &f3.one());
        // det = 1 - 4 = -3 = 0 mod 3
        assert_eq!(m.rank(), 1);
    }
}
