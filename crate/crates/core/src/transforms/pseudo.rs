use num_traits::{One, Zero};
use serde::Serialize;

use super::hat::rows_for_dim;
use super::TransformError;
use crate::cubicmap::Matrix2;
use crate::polyalg::Rational;
use crate::tensor::DenseTensor;

/// Shape and weight of a pseudotensor: `contravariant` upper indices
/// (stored first), `covariant` lower indices, weight `m`, dimension 2 or 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoSpec {
    pub contravariant: usize,
    pub covariant: usize,
    pub weight: i32,
    pub dim: usize,
}

impl PseudoSpec {
    pub fn new(contravariant: usize, covariant: usize, weight: i32, dim: usize) -> Self {
        Self {
            contravariant,
            covariant,
            weight,
            dim,
        }
    }

    pub fn rank(&self) -> usize {
        self.contravariant + self.covariant
    }
}

/// Old components from new ones under `x = S x~`, `T = S^{-1}`:
///
/// `A^{i..}_{j..} = (det T)^m S^i_p .. T^q_j .. A~^{p..}_{q..}`
///
/// In dimension 4 the block lifts of `S` and `T` are used; the weight factor
/// is always the 2x2 `det T`.
pub fn pseudo_transform(
    a: &DenseTensor<Rational>,
    spec: PseudoSpec,
    s: &Matrix2<Rational>,
) -> Result<DenseTensor<Rational>, TransformError> {
    if a.rank() != spec.rank() || a.dim() != spec.dim || !(spec.dim == 2 || spec.dim == 4) {
        return Err(TransformError::ShapeMismatch {
            expected: (spec.rank(), spec.dim),
            found: (a.rank(), a.dim()),
        });
    }
    let t = s.inverse().map_err(|_| TransformError::SingularMatrix)?;
    let s_rows = rows_for_dim(s, spec.dim);
    let t_rows = rows_for_dim(&t, spec.dim);
    let mut out = a.clone();
    for axis in 0..spec.contravariant {
        out = out.apply_upper(axis, &s_rows);
    }
    for axis in spec.contravariant..spec.rank() {
        out = out.apply_lower(axis, &t_rows);
    }
    let det_t = t.det();
    let factor = match spec.weight {
        0 => Rational::one(),
        w if w > 0 => num_traits::pow(det_t, w as usize),
        w => num_traits::pow(Rational::one() / det_t, w.unsigned_abs() as usize),
    };
    debug_assert!(!factor.is_zero());
    Ok(out.scale(&factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubicmap::{change_coordinates, CoeffTensor};
    use crate::invariants::PseudoD;
    use crate::polyalg::{rat, ratio};

    fn sample_s() -> Matrix2<Rational> {
        Matrix2::new(rat(2), ratio(1, 3), rat(-1), rat(4))
    }

    #[test]
    fn d_is_invariant_with_its_weights() {
        let d = PseudoD::dense::<Rational>();
        let s = sample_s();
        assert_eq!(
            pseudo_transform(&d, PseudoSpec::new(0, 2, -1, 2), &s).unwrap(),
            d
        );
        assert_eq!(
            pseudo_transform(&d, PseudoSpec::new(2, 0, 1, 2), &s).unwrap(),
            d
        );
        // the wrong weight is not invariant unless det T = 1
        assert_ne!(
            pseudo_transform(&d, PseudoSpec::new(0, 2, 0, 2), &s).unwrap(),
            d
        );
    }

    #[test]
    fn weight_zero_type_1_3_undoes_coordinate_change() {
        let f = CoeffTensor::from_independent([[1, -2, 0, 3], [2, 1, 0, -1]].map(|r| r.map(rat)));
        let s = sample_s();
        let moved = change_coordinates(&f, &s).unwrap();
        let back = pseudo_transform(moved.dense(), PseudoSpec::new(1, 3, 0, 2), &s).unwrap();
        assert_eq!(&back, f.dense());
    }

    #[test]
    fn errors() {
        let d = PseudoD::dense::<Rational>();
        assert_eq!(
            pseudo_transform(&d, PseudoSpec::new(1, 2, 0, 2), &sample_s()),
            Err(TransformError::ShapeMismatch {
                expected: (3, 2),
                found: (2, 2)
            })
        );
        assert_eq!(
            pseudo_transform(
                &d,
                PseudoSpec::new(0, 2, -1, 2),
                &Matrix2::from_ints(1, 2, 2, 4)
            ),
            Err(TransformError::SingularMatrix)
        );
    }
}
