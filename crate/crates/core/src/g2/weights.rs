use crate::arith::IntMatrix;

/// Torus weights of the seven coordinates `X1..X7`; index 0 is `X1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub weights: [[i64; 2]; 7],
}

pub fn build_weight_table() -> WeightTable {
    WeightTable { weights: [[1, 0], [0, 1], [1, -1], [0, 0], [-1, 1], [0, -1], [-1, 0]] }
}

impl WeightTable {
    /// Weight of `X_i`, `i` in `1..=7`.
    pub fn weight(&self, i: usize) -> [i64; 2] {
        self.weights[i - 1]
    }

    /// Chart coordinates `x_i = X_i / X4` for `i` in 1,2,3,5,6,7.
    pub fn chart_indices() -> [usize; 6] {
        [1, 2, 3, 5, 6, 7]
    }

    /// 2x6 matrix with the chart weights as columns.
    pub fn chart_matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<i64>> = Self::chart_indices().iter().map(|&i| self.weight(i).to_vec()).collect();
        IntMatrix::from_cols(&cols)
    }

    /// `w7 = -w1, w6 = -w2, w5 = -w3, w3 = w1 - w2, w4 = 0`.
    pub fn relations_hold(&self) -> bool {
        let w = |i| self.weight(i);
        let neg = |v: [i64; 2]| [-v[0], -v[1]];
        w(7) == neg(w(1)) && w(6) == neg(w(2)) && w(5) == neg(w(3)) && w(3) == [w(1)[0] - w(2)[0], w(1)[1] - w(2)[1]] && w(4) == [0, 0]
    }
}
