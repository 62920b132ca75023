use serde::Serialize;

use crate::cubicmap::CoeffTensor;
use crate::polyalg::Scalar;

/// Labels of the six determinants, in their canonical order.
pub const G_LABELS: [&str; 6] = ["1111", "1112", "1122", "1212", "1222", "2222"];

/// Column pairs of the 2x4 matrix of independent cubic coefficients
/// (columns 111, 112, 122, 222) that make up each determinant.
const COLUMN_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The six 2x2 minors `G_1111 .. G_2222` of a coefficient tensor.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GSet<S> {
    pub g1111: S,
    pub g1112: S,
    pub g1122: S,
    pub g1212: S,
    pub g1222: S,
    pub g2222: S,
}

impl<S: Scalar> GSet<S> {
    pub fn from_array([g1111, g1112, g1122, g1212, g1222, g2222]: [S; 6]) -> Self {
        Self {
            g1111,
            g1112,
            g1122,
            g1212,
            g1222,
            g2222,
        }
    }

    pub fn to_array(&self) -> [S; 6] {
        [
            self.g1111.clone(),
            self.g1112.clone(),
            self.g1122.clone(),
            self.g1212.clone(),
            self.g1222.clone(),
            self.g2222.clone(),
        ]
    }

    /// Determinant `k` in [`G_LABELS`] order.
    pub fn get(&self, k: usize) -> &S {
        match k {
            0 => &self.g1111,
            1 => &self.g1112,
            2 => &self.g1122,
            3 => &self.g1212,
            4 => &self.g1222,
            5 => &self.g2222,
            _ => panic!("determinant index {k} out of range"),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> GSet<T> {
        GSet::from_array(self.to_array().map(|x| f(&x)))
    }
}

pub fn g_determinants<S: Scalar>(f: &CoeffTensor<S>) -> GSet<S> {
    GSet::from_array(COLUMN_PAIRS.map(|(a, b)| {
        f.independent(0, a).clone() * f.independent(1, b)
            - f.independent(0, b).clone() * f.independent(1, a)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{rat, Rational};
    use num_traits::Zero;

    fn tensor(values: [[i64; 4]; 2]) -> CoeffTensor<Rational> {
        CoeffTensor::from_independent(values.map(|r| r.map(rat)))
    }

    #[test]
    fn examples() {
        let f0 = g_determinants(&tensor([[1, 0, 0, 0], [0, 0, 0, 1]]));
        assert_eq!(f0.to_array(), [0, 0, 1, 0, 0, 0].map(rat));

        // y1 = x1^3, y2 = 3 x1^2 x2
        let g = g_determinants(&tensor([[1, 0, 0, 0], [0, 1, 0, 0]]));
        assert_eq!(g.to_array(), [1, 0, 0, 0, 0, 0].map(rat));

        let zero = g_determinants(&CoeffTensor::<Rational>::zero());
        assert!(zero.to_array().iter().all(Zero::is_zero));
    }
}
