//! Executable checks of how the determinants and forms transform under
//! coordinate changes and compositions. Every check compares exact values
//! and reports the nonzero differences.

use num_traits::Zero;
use serde::Serialize;

use super::hat::rows_for_dim;
use super::TransformError;
use crate::cubicmap::{
    change_coordinates, cubic_coefficients, cubic_polys, equivalence_tensor, left_composed_tensor,
    right_compose_polys, right_composed_tensor, CoeffTensor, Matrix2,
};
use crate::invariants::{
    eval_at_point, forms, g_determinants, point_matrix, FormSource, GSet, SymTensor4, G_LABELS,
};
use crate::polyalg::{MultiPoly, PolyScalar, Rational, Scalar};

/// One component where the two sides differ, with `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub item: String,
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: &'static str,
    pub residuals: Vec<Residual>,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.residuals.is_empty()
    }

    /// The first few residuals on one line, or `None` when the law holds.
    pub fn summary(&self) -> Option<String> {
        if self.holds() {
            return None;
        }
        let mut parts: Vec<String> = self
            .residuals
            .iter()
            .take(3)
            .map(|r| format!("{}: {}", r.item, r.difference))
            .collect();
        if self.residuals.len() > 3 {
            parts.push(format!("(+{} more)", self.residuals.len() - 3));
        }
        Some(parts.join("; "))
    }
}

fn form_residuals<S: Scalar>(q: usize, lhs: &SymTensor4<S>, rhs: &SymTensor4<S>) -> Vec<Residual> {
    lhs.sub(rhs)
        .components()
        .map(|(idx, c)| {
            let label: String = idx
                .iter()
                .map(|i| (i + lhs.offset() + 1).to_string())
                .collect();
            Residual {
                item: format!("omega[{q}]_{label}"),
                difference: c.to_string(),
            }
        })
        .collect()
}

fn g_residuals<S: Scalar>(lhs: &GSet<S>, rhs: &GSet<S>) -> Vec<Residual> {
    lhs.to_array()
        .into_iter()
        .zip(rhs.to_array())
        .zip(G_LABELS)
        .filter(|((a, b), _)| a != b)
        .map(|((a, b), label)| Residual {
            item: format!("G{label}"),
            difference: (a - b).to_string(),
        })
        .collect()
}

fn forms_residuals<S: Scalar>(lhs: &[SymTensor4<S>], rhs: &[SymTensor4<S>]) -> Vec<Residual> {
    lhs.iter()
        .zip(rhs)
        .enumerate()
        .flat_map(|(k, (a, b))| form_residuals(k + 1, a, b))
        .collect()
}

/// Pulls each form back by `m` (lifted to dimension 4 where needed).
fn pulled_back<S: Scalar>(forms: &[SymTensor4<S>], m: &Matrix2<S>) -> Vec<SymTensor4<S>> {
    forms
        .iter()
        .map(|w| w.pull_back(&rows_for_dim(m, w.dim())))
        .collect()
}

fn scaled<S: Scalar>(forms: &[SymTensor4<S>], c: &S) -> Vec<SymTensor4<S>> {
    forms.iter().map(|w| w.mul_scalar(c)).collect()
}

/// Forms are true tensors: the forms of `F~` (coordinates `x = S x~`) are
/// the `S`-pullbacks of the forms of `F`, with the block lift for `q = 2..5`.
pub fn check_tensoriality(
    f: &CoeffTensor<Rational>,
    s: &Matrix2<Rational>,
    source: FormSource,
) -> Result<LawReport, TransformError> {
    let ftilde = change_coordinates(f, s).map_err(|_| TransformError::SingularMatrix)?;
    let new = forms(&ftilde, source)?;
    let expected = pulled_back(&forms(f, source)?, s);
    Ok(LawReport {
        law: "tensoriality",
        residuals: forms_residuals(&new, &expected),
    })
}

/// Left composition `f = phi^{-1} o f~`: every determinant and every form
/// scales by `det S`, `S = T^{-1}`.
pub fn left_law_check(
    ftilde: &CoeffTensor<Rational>,
    t: &Matrix2<Rational>,
    source: FormSource,
) -> Result<LawReport, TransformError> {
    let s = t.inverse().map_err(|_| TransformError::SingularMatrix)?;
    let det_s = s.det();
    let f = left_composed_tensor(ftilde, &s);
    let g_expected = g_determinants(ftilde).map(|g| g.clone() * &det_s);
    let mut residuals = g_residuals(&g_determinants(&f), &g_expected);
    residuals.extend(forms_residuals(
        &forms(&f, source)?,
        &scaled(&forms(ftilde, source)?, &det_s),
    ));
    Ok(LawReport {
        law: "left-composition",
        residuals,
    })
}

/// Right composition `f = f~ o phi`: each form of `f` is `det T` times the
/// `T`-pullback of the form of `f~`. No inverse is needed, so `T` may be
/// singular or symbolic.
pub fn right_law_check<S: PolyScalar>(
    ftilde: &CoeffTensor<S>,
    t: &Matrix2<S>,
    source: FormSource,
) -> Result<LawReport, TransformError> {
    let f = right_composed_tensor(ftilde, t);
    let expected = scaled(&pulled_back(&forms(ftilde, source)?, t), &t.det());
    Ok(LawReport {
        law: "right-composition",
        residuals: forms_residuals(&forms(&f, source)?, &expected),
    })
}

/// Two-sided equivalence `F = S1 . F~ . T2 T2 T2`: determinants equal
/// `det S1 det T2` times the forms of `F~` at the entries of `T2`, and each
/// form is `det S1 det T2` times the `T2`-pullback.
pub fn equivalence_law_check(
    ftilde: &CoeffTensor<Rational>,
    t1: &Matrix2<Rational>,
    t2: &Matrix2<Rational>,
    source: FormSource,
) -> Result<LawReport, TransformError> {
    let s1 = t1.inverse().map_err(|_| TransformError::SingularMatrix)?;
    let factor = s1.det() * t2.det();
    let f = equivalence_tensor(ftilde, &s1, t2);
    let old = forms(ftilde, source)?;
    let z = t2.as_point();
    let g_expected = GSet::from_array(
        old.iter()
            .map(|w| eval_at_point(w, &z) * &factor)
            .collect::<Vec<_>>()
            .try_into()
            .expect("six forms"),
    );
    let mut residuals = g_residuals(&g_determinants(&f), &g_expected);
    residuals.extend(forms_residuals(
        &forms(&f, source)?,
        &scaled(&pulled_back(&old, t2), &factor),
    ));
    Ok(LawReport {
        law: "equivalence",
        residuals,
    })
}

/// One row of the composed-determinant table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComposedRow<S> {
    pub label: &'static str,
    pub lhs: S,
    pub rhs: S,
}

impl<S: PartialEq> ComposedRow<S> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Determinants of `f~ o T` against `det T` times each form of `f~`
/// evaluated at `z = (T^1_1, T^2_1, T^1_2, T^2_2)`.
pub fn composed_determinant_check<S: PolyScalar>(
    ftilde: &CoeffTensor<S>,
    t: &Matrix2<S>,
    source: FormSource,
) -> Result<Vec<ComposedRow<S>>, TransformError> {
    let lhs = g_determinants(&right_composed_tensor(ftilde, t)).to_array();
    let det = t.det();
    let z = t.as_point();
    let rhs = forms(ftilde, source)?
        .into_iter()
        .map(|w| eval_at_point(&w, &z) * &det);
    Ok(G_LABELS
        .into_iter()
        .zip(lhs)
        .zip(rhs)
        .map(|((label, lhs), rhs)| ComposedRow { label, lhs, rhs })
        .collect())
}

/// The composed-determinant identity with all eight coefficients and all
/// four matrix entries indeterminate. The left side is computed by
/// substituting into the cubic polynomials rather than by contracting
/// the tensor, and the right side multiplies `det T` by each form.
pub fn symbolic_composed_check(source: FormSource) -> Result<LawReport, TransformError> {
    let ftilde = CoeffTensor::<MultiPoly>::symbolic();
    let t = point_matrix();
    let zero = [MultiPoly::zero(), MultiPoly::zero()];
    let composed = right_compose_polys(&cubic_polys(&ftilde), &t, &zero);
    let lhs = g_determinants(&cubic_coefficients(&composed));
    let det = t.det();
    let rhs = GSet::from_array(
        forms(&ftilde, source)?
            .iter()
            .map(|w| w.to_poly() * &det)
            .collect::<Vec<_>>()
            .try_into()
            .expect("six forms"),
    );
    Ok(LawReport {
        law: "composed-determinants-symbolic",
        residuals: g_residuals(&lhs, &rhs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{rat, ratio};

    fn f0() -> CoeffTensor<Rational> {
        CoeffTensor::from_independent([[1, 0, 0, 0], [0, 0, 0, 1]].map(|r| r.map(rat)))
    }

    fn sample() -> CoeffTensor<Rational> {
        CoeffTensor::from_independent([
            [rat(2), ratio(-1, 3), rat(0), rat(5)],
            [ratio(7, 2), rat(1), rat(-4), ratio(1, 9)],
        ])
    }

    fn shear() -> Matrix2<Rational> {
        Matrix2::from_ints(1, 1, 0, 1)
    }

    #[test]
    fn tensoriality_examples() {
        for source in [FormSource::Derived, FormSource::Symmetrized] {
            assert!(check_tensoriality(&f0(), &Matrix2::identity(), source)
                .unwrap()
                .holds());
            assert!(check_tensoriality(&f0(), &shear(), source).unwrap().holds());
            let s = Matrix2::new(rat(3), ratio(1, 2), rat(-2), rat(7));
            assert!(check_tensoriality(&sample(), &s, source).unwrap().holds());
        }
        assert_eq!(
            check_tensoriality(&f0(), &Matrix2::from_ints(1, 0, 0, 0), FormSource::Derived),
            Err(TransformError::SingularMatrix)
        );
    }

    #[test]
    fn left_law_diag() {
        let t = Matrix2::from_ints(2, 0, 0, 1);
        let report = left_law_check(&f0(), &t, FormSource::Derived).unwrap();
        assert!(report.holds());
        let f = left_composed_tensor(&f0(), &t.inverse().unwrap());
        assert_eq!(g_determinants(&f).g1122, ratio(1, 2));
        assert!(left_law_check(
            &sample(),
            &Matrix2::new(rat(1), ratio(2, 3), rat(5), rat(-1)),
            FormSource::Derived
        )
        .unwrap()
        .holds());
    }

    #[test]
    fn right_law_examples() {
        assert!(
            right_law_check(&f0(), &Matrix2::identity(), FormSource::Derived)
                .unwrap()
                .holds()
        );
        assert!(right_law_check(&f0(), &shear(), FormSource::Derived)
            .unwrap()
            .holds());
        let singular = Matrix2::new(rat(2), rat(-1), ratio(4, 3), ratio(-2, 3));
        assert_eq!(singular.det(), rat(0));
        assert!(
            right_law_check(&sample(), &singular, FormSource::Symmetrized)
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn equivalence_combines_both_laws() {
        let t1 = Matrix2::new(rat(1), rat(2), ratio(1, 2), rat(3));
        let t2 = Matrix2::new(rat(-1), ratio(1, 4), rat(2), rat(1));
        assert!(
            equivalence_law_check(&sample(), &t1, &t2, FormSource::Derived)
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn composed_table_for_f0() {
        let rows = composed_determinant_check(&f0(), &shear(), FormSource::Derived).unwrap();
        let lhs: Vec<Rational> = rows.iter().map(|r| r.lhs.clone()).collect();
        assert_eq!(lhs, [0, 0, 1, 0, 1, 1].map(rat).to_vec());
        assert!(rows.iter().all(ComposedRow::holds));

        let zero =
            composed_determinant_check(&f0(), &Matrix2::zero(), FormSource::Derived).unwrap();
        assert!(zero.iter().all(|r| r.lhs == rat(0) && r.rhs == rat(0)));
    }

    #[test]
    fn summary_lists_first_residuals() {
        let r = |k: usize| Residual {
            item: format!("G{k}"),
            difference: k.to_string(),
        };
        let report = LawReport {
            law: "x",
            residuals: (1..=5).map(r).collect(),
        };
        assert_eq!(report.summary().unwrap(), "G1: 1; G2: 2; G3: 3; (+2 more)");
        assert_eq!(
            LawReport {
                law: "x",
                residuals: vec![]
            }
            .summary(),
            None
        );
    }
}
