//! The six quartic forms as literal monomial tables in the determinants.
//!
//! Transcribed verbatim, including two coefficients that disagree with the
//! derived construction (the `z2^3 z3` term of form 2 and the `z2^2 z4^2`
//! term of form 4). The discrepancy report surfaces them; nothing here is
//! corrected.

use super::{GSet, InvariantError, SymTensor4};
use crate::polyalg::Scalar;

const G1111: usize = 0;
const G1112: usize = 1;
const G1122: usize = 2;
const G1212: usize = 3;
const G1222: usize = 4;
const G2222: usize = 5;

/// One monomial: absolute exponents over `z1..z4` and its coefficient as an
/// integer combination of determinants.
type Row = ([u32; 4], &'static [(i64, usize)]);

const FORM1: &[Row] = &[
    ([4, 0, 0, 0], &[(1, G1111)]),
    ([3, 1, 0, 0], &[(2, G1112)]),
    ([2, 2, 0, 0], &[(3, G1212), (1, G1122)]),
    ([1, 3, 0, 0], &[(2, G1222)]),
    ([0, 4, 0, 0], &[(1, G2222)]),
];

const FORM2: &[Row] = &[
    ([3, 0, 1, 0], &[(2, G1111)]),
    ([3, 0, 0, 1], &[(1, G1112)]),
    ([2, 1, 1, 0], &[(3, G1112)]),
    ([2, 1, 0, 1], &[(3, G1212), (1, G1122)]),
    ([1, 2, 1, 0], &[(3, G1212), (1, G1122)]),
    ([1, 2, 0, 1], &[(3, G1222)]),
    ([0, 3, 1, 0], &[(1, G2222)]),
    ([0, 3, 0, 1], &[(2, G2222)]),
];

const FORM3: &[Row] = &[
    ([2, 0, 2, 0], &[(3, G1111)]),
    ([2, 0, 1, 1], &[(3, G1112)]),
    ([2, 0, 0, 2], &[(1, G1122)]),
    ([1, 1, 2, 0], &[(3, G1112)]),
    ([1, 1, 1, 1], &[(9, G1212), (1, G1122)]),
    ([1, 1, 0, 2], &[(3, G1222)]),
    ([0, 2, 2, 0], &[(1, G1122)]),
    ([0, 2, 1, 1], &[(3, G1222)]),
    ([0, 2, 0, 2], &[(3, G2222)]),
];

const FORM4: &[Row] = &[
    ([2, 0, 2, 0], &[(1, G1111)]),
    ([2, 0, 1, 1], &[(1, G1112)]),
    ([2, 0, 0, 2], &[(1, G1212)]),
    ([1, 1, 2, 0], &[(1, G1112)]),
    ([1, 1, 1, 1], &[(1, G1212), (1, G1122)]),
    ([1, 1, 0, 2], &[(1, G1222)]),
    ([0, 2, 2, 0], &[(1, G1212)]),
    ([0, 2, 1, 1], &[(1, G1222)]),
    ([0, 2, 0, 2], &[(1, G1222)]),
];

const FORM5: &[Row] = &[
    ([1, 0, 3, 0], &[(2, G1111)]),
    ([0, 1, 3, 0], &[(1, G1112)]),
    ([1, 0, 2, 1], &[(3, G1112)]),
    ([0, 1, 2, 1], &[(3, G1212), (1, G1122)]),
    ([1, 0, 1, 2], &[(3, G1212), (1, G1122)]),
    ([0, 1, 1, 2], &[(3, G1222)]),
    ([1, 0, 0, 3], &[(1, G1222)]),
    ([0, 1, 0, 3], &[(2, G2222)]),
];

const FORM6: &[Row] = &[
    ([0, 0, 4, 0], &[(1, G1111)]),
    ([0, 0, 3, 1], &[(2, G1112)]),
    ([0, 0, 2, 2], &[(3, G1212), (1, G1122)]),
    ([0, 0, 1, 3], &[(2, G1222)]),
    ([0, 0, 0, 4], &[(1, G2222)]),
];

/// `(dim, offset)` of form `q`: binary forms on `(z1,z2)` and `(z3,z4)` for
/// `q = 1, 6`, quaternary forms on `z1..z4` otherwise.
pub fn form_shape(q: usize) -> Result<(usize, usize), InvariantError> {
    match q {
        1 => Ok((2, 0)),
        6 => Ok((2, 2)),
        2..=5 => Ok((4, 0)),
        _ => Err(InvariantError::InvalidForm(q)),
    }
}

/// Form `q` with the monomial coefficients exactly as tabulated.
pub fn printed_form<S: Scalar>(q: usize, g: &GSet<S>) -> Result<SymTensor4<S>, InvariantError> {
    let (dim, offset) = form_shape(q)?;
    let table = [FORM1, FORM2, FORM3, FORM4, FORM5, FORM6][q - 1];
    let coeffs = table.iter().map(|(exps, combo)| {
        let c = combo.iter().fold(S::zero(), |acc, &(k, gi)| {
            acc + g.get(gi).scale(&crate::polyalg::rat(k))
        });
        (exps[offset..offset + dim].to_vec(), c)
    });
    Ok(SymTensor4::from_coefficients(dim, offset, coeffs))
}
