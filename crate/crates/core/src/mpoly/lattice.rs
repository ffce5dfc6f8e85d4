use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{smith_normal_form, IntMatrix, Matrix, Scalar};

/// The lattice of Laurent monomials fixed by a torus, i.e. the integer
/// kernel of a weight matrix (one column per coordinate).
#[derive(Clone, Debug)]
pub struct KernelLattice {
    pub weights: IntMatrix,
    /// Basis vectors, each of length `weights.cols()`.
    pub basis: Vec<Vec<BigInt>>,
}

pub fn laurent_kernel_lattice(weights: &IntMatrix) -> KernelLattice {
    let snf = smith_normal_form(weights);
    let rank = snf.rank();
    let basis = (rank..weights.cols()).map(|j| snf.v.col(j)).collect();
    KernelLattice { weights: weights.clone(), basis }
}

/// Index of the subgroup spanned by `vectors` inside the kernel lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    /// The vectors do not span a full-rank sublattice.
    Infinite { rank: usize, needed: usize },
    /// Some vector is not in the kernel.
    NotInLattice(usize),
}

impl KernelLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.weights.mul_vec(v).iter().all(Zero::is_zero)
    }

    /// Integer coordinates of `v` in the basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let b = IntMatrix::from_cols_big(&self.basis, self.weights.cols());
        solve_integer(&b, v)
    }

    pub fn index_of(&self, vectors: &[Vec<i64>]) -> LatticeIndex {
        let mut coords = Vec::new();
        for (i, v) in vectors.iter().enumerate() {
            let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            if !self.contains(&v) {
                return LatticeIndex::NotInLattice(i);
            }
            match self.coordinates(&v) {
                Some(c) => coords.push(c),
                None => return LatticeIndex::NotInLattice(i),
            }
        }
        let c = IntMatrix::from_cols_big(&coords, self.rank());
        let snf = smith_normal_form(&c);
        let divs = snf.elementary_divisors();
        if divs.len() < self.rank() {
            return LatticeIndex::Infinite { rank: divs.len(), needed: self.rank() };
        }
        LatticeIndex::Finite(divs.iter().product())
    }
}

/// An integer solution of `a * x = t`, or `None` if there is none.
pub fn solve_integer(a: &IntMatrix, t: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), t.len(), "shape mismatch");
    let snf = smith_normal_form(a);
    // u a v = d, so d (v^-1 x) = u t
    let y = snf.u.mul_vec(t);
    let mut z = vec![BigInt::zero(); a.cols()];
    for (i, yi) in y.iter().enumerate() {
        let d = if i < a.cols() { snf.d.get(i, i).clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !yi.is_zero() {
                return None;
            }
        } else {
            let (q, r) = yi.div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        }
    }
    Some(snf.v.mul_vec(&z))
}

/// Rank of an integer matrix over the rationals.
pub fn rational_rank(a: &IntMatrix) -> usize {
    let rows = (0..a.rows()).map(|i| (0..a.cols()).map(|j| Scalar::from(BigRational::from_integer(a.get(i, j).clone()))).collect()).collect();
    Matrix::from_rows(rows, &Scalar::from(BigRational::one())).rank()
}

impl IntMatrix {
    pub fn from_cols_big(cols: &[Vec<BigInt>], nrows: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart() -> IntMatrix {
        IntMatrix::from_cols(&[vec![1, 0], vec![0, 1], vec![1, -1], vec![-1, 1], vec![0, -1], vec![-1, 0]])
    }

    #[test]
    fn kernel_rank_four() {
        let k = laurent_kernel_lattice(&chart());
        assert_eq!(k.rank(), 4);
        assert!(k.basis.iter().all(|b| k.contains(b)));
    }

    #[test]
    fn index_of_sublattices() {
        let k = laurent_kernel_lattice(&chart());
        // x1x6, x2x5, x3x4 style products and one triple
        let ok = [vec![1, 0, 0, 0, 0, 1], vec![0, 1, 0, 0, 1, 0], vec![0, 0, 1, 1, 0, 0], vec![1, 0, 0, 1, 1, 0]];
        assert_eq!(k.index_of(&ok), LatticeIndex::Finite(BigInt::one()));
        let doubled = [vec![1, 0, 0, 0, 0, 1], vec![0, 1, 0, 0, 1, 0], vec![0, 0, 1, 1, 0, 0], vec![2, 0, 0, 2, 2, 0]];
        assert_eq!(k.index_of(&doubled), LatticeIndex::Finite(BigInt::from(2)));
        assert!(matches!(k.index_of(&ok[..3]), LatticeIndex::Infinite { rank: 3, needed: 4 }));
        assert_eq!(k.index_of(&[vec![1, 0, 0, 0, 0, 0]]), LatticeIndex::NotInLattice(0));
    }

    #[test]
    fn integer_solve() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(solve_integer(&a, &[BigInt::from(4), BigInt::from(9)]), Some(vec![BigInt::from(2), BigInt::from(3)]));
        assert_eq!(solve_integer(&a, &[BigInt::from(1), BigInt::from(0)]), None);
    }
}
