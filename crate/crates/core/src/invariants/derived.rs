//! The quartic forms as the quotients that make the composed-determinant
//! identity hold.
//!
//! With the entries of a matrix `T` read as `z1 = T^1_1, z2 = T^2_1,
//! z3 = T^1_2, z4 = T^2_2`, each determinant of the right-composed tensor
//! `F^i_{mnp} = Ftilde^i_{abc} T^a_m T^b_n T^c_p` is a degree-6 polynomial in
//! `z` divisible by `det T = z1 z4 - z2 z3`. The quotient is form `q` of
//! `Ftilde`.

use super::printed::form_shape;
use super::symtensor::Z_VARS;
use super::{g_determinants, InvariantError, SymTensor4};
use crate::cubicmap::{right_composed_tensor, CoeffTensor, Matrix2};
use crate::polyalg::{MultiPoly, PolyScalar};

/// `T` with indeterminate entries laid out as a point `(z1, z2, z3, z4)`.
pub fn point_matrix() -> Matrix2<MultiPoly> {
    let z = |k: usize| MultiPoly::var(Z_VARS[k]);
    Matrix2::new(z(0), z(2), z(1), z(3))
}

/// The determinants of `ftilde` right-composed with the indeterminate matrix.
pub fn composed_determinants<S: PolyScalar>(ftilde: &CoeffTensor<S>) -> [MultiPoly; 6] {
    let lifted = ftilde.map(PolyScalar::to_poly);
    let composed = right_composed_tensor(&lifted, &point_matrix());
    g_determinants(&composed).to_array()
}

pub fn derived_form<S: PolyScalar>(
    q: usize,
    ftilde: &CoeffTensor<S>,
) -> Result<SymTensor4<S>, InvariantError> {
    let (dim, offset) = form_shape(q)?;
    let g = composed_determinants(ftilde)
        .into_iter()
        .nth(q - 1)
        .expect("six determinants");
    let det = point_matrix().det();
    let quotient = g.div_exact(&det).ok_or(InvariantError::NotDivisible(q))?;
    SymTensor4::from_poly(dim, offset, &quotient)
}

/// All six derived forms; the composition is expanded once.
pub fn derived_forms<S: PolyScalar>(
    ftilde: &CoeffTensor<S>,
) -> Result<Vec<SymTensor4<S>>, InvariantError> {
    let det = point_matrix().det();
    composed_determinants(ftilde)
        .into_iter()
        .enumerate()
        .map(|(k, g)| {
            let q = k + 1;
            let (dim, offset) = form_shape(q)?;
            let quotient = g.div_exact(&det).ok_or(InvariantError::NotDivisible(q))?;
            SymTensor4::from_poly(dim, offset, &quotient)
        })
        .collect()
}
