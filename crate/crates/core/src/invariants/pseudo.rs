//! Quartic forms built from the coefficient tensor by contraction with the
//! fundamental skew pseudotensor `d`, extension to four dimensions, the block
//! exchange operator, and symmetrization over listed index arrangements.

use super::printed::form_shape;
use super::{InvariantError, SymTensor4};
use crate::cubicmap::CoeffTensor;
use crate::polyalg::{ratio, Scalar};
use crate::tensor::DenseTensor;

/// The skew array `[[0, 1], [-1, 0]]`. As `d_{ij}` it is a pseudotensor of
/// type (0,2) and weight -1; as `d^{ij}` one of type (2,0) and weight +1.
#[derive(Clone, Copy, Debug)]
pub struct PseudoD;

impl PseudoD {
    pub const MATRIX: [[i64; 2]; 2] = [[0, 1], [-1, 0]];

    pub fn lower(i: usize, j: usize) -> i64 {
        Self::MATRIX[i][j]
    }

    pub fn upper(i: usize, j: usize) -> i64 {
        Self::MATRIX[i][j]
    }

    pub fn dense<S: Scalar>() -> DenseTensor<S> {
        DenseTensor::from_fn(2, 2, |t| S::from_int(Self::MATRIX[t[0]][t[1]]))
    }
}

/// The 4x4 operator `eps^i_j` swapping `(z1, z2)` with `(z3, z4)`.
#[derive(Clone, Copy, Debug)]
pub struct Exchange4;

impl Exchange4 {
    pub fn get(i: usize, j: usize) -> i64 {
        i64::from(j == (i + 2) % 4)
    }

    pub fn rows<S: Scalar>() -> Vec<Vec<S>> {
        (0..4)
            .map(|i| (0..4).map(|j| S::from_int(Self::get(i, j))).collect())
            .collect()
    }
}

/// `Omega_{imnp} = 1/2 F^r_{s i m} F^t_{u n p} d^{su} d_{rt}`.
pub fn pair_tensor<S: Scalar>(f: &CoeffTensor<S>) -> DenseTensor<S> {
    let half = ratio(1, 2);
    DenseTensor::from_fn(2, 4, |t| {
        let (i, m, n, p) = (t[0], t[1], t[2], t[3]);
        let mut acc = S::zero();
        for r in 0..2 {
            for rr in 0..2 {
                let dr = PseudoD::lower(r, rr);
                if dr == 0 {
                    continue;
                }
                for s in 0..2 {
                    for ss in 0..2 {
                        let ds = PseudoD::upper(s, ss);
                        if ds == 0 {
                            continue;
                        }
                        let term = f.get(r, s, i, m).clone() * f.get(rr, ss, n, p);
                        acc = acc + term.scale(&crate::polyalg::rat(dr * ds));
                    }
                }
            }
        }
        acc.scale(&half)
    })
}

/// Zero-pads a dimension-2 rank-4 array to dimension 4.
pub fn hat_extension<S: Scalar>(omega: &DenseTensor<S>) -> DenseTensor<S> {
    assert_eq!((omega.dim(), omega.rank()), (2, 4));
    DenseTensor::from_fn(4, 4, |t| {
        if t.iter().all(|&i| i < 2) {
            omega.get(t).clone()
        } else {
            S::zero()
        }
    })
}

/// Contracts the listed axes of `hat` with the exchange operator.
fn exchanged<S: Scalar>(hat: &DenseTensor<S>, axes: &[usize]) -> DenseTensor<S> {
    let eps = Exchange4::rows::<S>();
    axes.iter()
        .fold(hat.clone(), |t, &a| t.apply_lower(a, &eps))
}

/// `Omega[A]_{imnp} = 2 Omega^_{imnq} eps^q_p`.
pub fn omega_a<S: Scalar>(hat: &DenseTensor<S>) -> DenseTensor<S> {
    exchanged(hat, &[3]).scale(&crate::polyalg::rat(2))
}

/// `Omega[B] = Omega[C] + 2 Omega^_{imqr} eps^q_n eps^r_p`.
pub fn omega_b<S: Scalar>(hat: &DenseTensor<S>) -> DenseTensor<S> {
    omega_c(hat).add(&exchanged(hat, &[2, 3]).scale(&crate::polyalg::rat(2)))
}

/// `Omega[C]_{imnp} = Omega^_{iqnr} eps^q_m eps^r_p`.
pub fn omega_c<S: Scalar>(hat: &DenseTensor<S>) -> DenseTensor<S> {
    exchanged(hat, &[1, 3])
}

/// `Omega[D]_{imnp} = 2 Omega^_{iqrs} eps^q_m eps^r_n eps^s_p`.
pub fn omega_d<S: Scalar>(hat: &DenseTensor<S>) -> DenseTensor<S> {
    exchanged(hat, &[1, 2, 3]).scale(&crate::polyalg::rat(2))
}

/// Index arrangements averaged for form 2, read as `X_{abcd}` with letters
/// drawn from `(i, m, n, p)`.
pub const ARRANGEMENTS_A: [&str; 12] = [
    "imnp", "ipmn", "inpm", "inmp", "ipnm", "impn", "mpin", "mnpi", "pnim", "pmni", "nmip", "npmi",
];

/// Index arrangements averaged for form 3.
pub const ARRANGEMENTS_B: [&str; 24] = [
    "imnp", "ipmn", "inpm", "inmp", "ipnm", "impn", "minp", "mpin", "mnpi", "mnip", "mpni", "mipn",
    "pimn", "pnim", "pmni", "pmin", "pnmi", "pinm", "nipm", "nmip", "npmi", "npim", "nmpi", "nimp",
];

/// Index arrangements averaged for form 4.
pub const ARRANGEMENTS_C: [&str; 12] = [
    "imnp", "ipmn", "inpm", "inmp", "ipnm", "impn", "minp", "mnpi", "mpni", "mipn", "pmni", "pinm",
];

/// Index arrangements averaged for form 5.
pub const ARRANGEMENTS_D: [&str; 12] = [
    "imnp", "nimp", "mnip", "inmp", "minp", "nmip", "pimn", "mpin", "pnim", "ipnm", "pmni", "npmi",
];

/// Arrangements averaged for form 1 (a cyclic average of three).
pub const ARRANGEMENTS_1: [&str; 3] = ["imnp", "mnip", "nimp"];

fn arrangement(word: &str) -> [usize; 4] {
    let pos = |c: char| match c {
        'i' => 0,
        'm' => 1,
        'n' => 2,
        'p' => 3,
        other => panic!("bad index letter {other}"),
    };
    let v: Vec<usize> = word.chars().map(pos).collect();
    v.try_into().expect("four letters")
}

/// `1/len * sum over words of X[word(i, m, n, p)]`.
pub fn symmetrize_listed<S: Scalar>(x: &DenseTensor<S>, words: &[&str]) -> DenseTensor<S> {
    let sum = words
        .iter()
        .map(|w| x.permuted(arrangement(w)))
        .reduce(|a, b| a.add(&b))
        .expect("nonempty arrangement list");
    sum.scale(&ratio(1, words.len() as i64))
}

/// Dense components of form `q` by the pseudotensor route (before
/// reduction to sorted storage).
pub fn symmetrized_dense<S: Scalar>(
    q: usize,
    f: &CoeffTensor<S>,
) -> Result<DenseTensor<S>, InvariantError> {
    form_shape(q)?;
    let omega = pair_tensor(f);
    if q == 1 || q == 6 {
        return Ok(symmetrize_listed(&omega, &ARRANGEMENTS_1));
    }
    let hat = hat_extension(&omega);
    Ok(match q {
        2 => symmetrize_listed(&omega_a(&hat), &ARRANGEMENTS_A),
        3 => symmetrize_listed(&omega_b(&hat), &ARRANGEMENTS_B),
        4 => symmetrize_listed(&omega_c(&hat), &ARRANGEMENTS_C),
        _ => symmetrize_listed(&omega_d(&hat), &ARRANGEMENTS_D),
    })
}

/// The unsymmetrized source array for form `q` (`Omega`, `Omega[A..D]`).
pub fn unsymmetrized<S: Scalar>(
    q: usize,
    f: &CoeffTensor<S>,
) -> Result<DenseTensor<S>, InvariantError> {
    form_shape(q)?;
    let omega = pair_tensor(f);
    if q == 1 || q == 6 {
        return Ok(omega);
    }
    let hat = hat_extension(&omega);
    Ok(match q {
        2 => omega_a(&hat),
        3 => omega_b(&hat),
        4 => omega_c(&hat),
        _ => omega_d(&hat),
    })
}

/// Form `q` by the pseudotensor route. Form 6 is form 1 with its indices
/// shifted onto `(z3, z4)`.
pub fn symmetrized_form<S: Scalar>(
    q: usize,
    f: &CoeffTensor<S>,
) -> Result<SymTensor4<S>, InvariantError> {
    let (_, offset) = form_shape(q)?;
    Ok(SymTensor4::from_dense(&symmetrized_dense(q, f)?, offset))
}
