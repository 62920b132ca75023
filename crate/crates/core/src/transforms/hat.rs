use crate::cubicmap::Matrix2;
use crate::polyalg::Scalar;
use crate::tensor::permutations4;

/// Block-diagonal lift of a 2x2 matrix to `R^2 (+) R^2`: the same block acts
/// on `(z1, z2)` and on `(z3, z4)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix4Block<S> {
    block: Matrix2<S>,
}

pub fn hat_matrix<S: Scalar>(s: &Matrix2<S>) -> Matrix4Block<S> {
    Matrix4Block { block: s.clone() }
}

impl<S: Scalar> Matrix4Block<S> {
    pub fn block(&self) -> &Matrix2<S> {
        &self.block
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        if i / 2 == j / 2 {
            self.block.get(i % 2, j % 2).clone()
        } else {
            S::zero()
        }
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        (0..4)
            .map(|i| (0..4).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            block: self.block.mul(&other.block),
        }
    }

    /// Full 4x4 determinant by permutation expansion.
    pub fn det(&self) -> S {
        permutations4()
            .into_iter()
            .map(|p| {
                let inversions = (0..4)
                    .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let prod = (0..4).fold(S::one(), |acc, i| acc * &self.get(i, p[i]));
                if inversions % 2 == 0 {
                    prod
                } else {
                    -prod
                }
            })
            .fold(S::zero(), |acc, t| acc + t)
    }
}

/// Rows of `M` for dimension 2, or of its block lift for dimension 4.
pub fn rows_for_dim<S: Scalar>(m: &Matrix2<S>, dim: usize) -> Vec<Vec<S>> {
    match dim {
        2 => m.rows(),
        4 => hat_matrix(m).rows(),
        _ => panic!("dimension must be 2 or 4"),
    }
}
