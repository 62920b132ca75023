//! The six determinants of a coefficient tensor and the six quartic forms
//! built from them.
//!
//! Each form is available three ways:
//! - [`printed_form`]: a literal monomial table in the determinants;
//! - [`derived_form`]: the exact quotient of a composed determinant by
//!   `det T` (canonical);
//! - [`symmetrized_form`]: contraction with the skew pseudotensor followed by
//!   symmetrization.
//!
//! [`discrepancy_report`] compares all three with symbolic coefficients.

mod derived;
mod gset;
mod printed;
mod pseudo;
mod report;
mod symtensor;

use serde::Serialize;
use thiserror::Error;

pub use derived::{composed_determinants, derived_form, derived_forms, point_matrix};
pub use gset::{g_determinants, GSet, G_LABELS};
pub use printed::{form_shape, printed_form};
pub use pseudo::{
    hat_extension, omega_a, omega_b, omega_c, omega_d, pair_tensor, symmetrize_listed,
    symmetrized_dense, symmetrized_form, unsymmetrized, Exchange4, PseudoD, ARRANGEMENTS_1,
    ARRANGEMENTS_A, ARRANGEMENTS_B, ARRANGEMENTS_C, ARRANGEMENTS_D,
};
pub use report::{compare_constructions, discrepancy_report, DiscrepancyReport, DiscrepancyRow};
pub use symtensor::{multiplicity, SymTensor4, Z_VARS};

use crate::cubicmap::CoeffTensor;
use crate::polyalg::PolyScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("form index {0} is outside 1..=6")]
    InvalidForm(usize),
    #[error("det T does not divide composed determinant {0}")]
    NotDivisible(usize),
    #[error("not a quartic form on the expected variables: {0}")]
    NotAQuarticForm(String),
    #[error("coefficient is not a rational constant")]
    NonRational,
    #[error("point has {found} coordinates, form expects {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Which construction to use when a form is needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormSource {
    Printed,
    #[default]
    Derived,
    Symmetrized,
}

impl FormSource {
    pub fn name(self) -> &'static str {
        match self {
            FormSource::Printed => "printed",
            FormSource::Derived => "derived",
            FormSource::Symmetrized => "symmetrized",
        }
    }
}

impl std::str::FromStr for FormSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "printed" => Ok(FormSource::Printed),
            "derived" => Ok(FormSource::Derived),
            "symmetrized" => Ok(FormSource::Symmetrized),
            other => Err(format!("unknown form construction `{other}`")),
        }
    }
}

/// Form `q` of `f` by the chosen construction.
pub fn form<S: PolyScalar>(
    q: usize,
    f: &CoeffTensor<S>,
    source: FormSource,
) -> Result<SymTensor4<S>, InvariantError> {
    match source {
        FormSource::Printed => printed_form(q, &g_determinants(f)),
        FormSource::Derived => derived_form(q, f),
        FormSource::Symmetrized => symmetrized_form(q, f),
    }
}

/// All six forms of `f` by the chosen construction.
pub fn forms<S: PolyScalar>(
    f: &CoeffTensor<S>,
    source: FormSource,
) -> Result<Vec<SymTensor4<S>>, InvariantError> {
    match source {
        FormSource::Derived => derived_forms(f),
        _ => (1..=6).map(|q| form(q, f, source)).collect(),
    }
}

/// Evaluates form `q` at a point of `R^4`, using only `(z1, z2)` for
/// `q = 1` and `(z3, z4)` for `q = 6`.
pub fn eval_at_point<S: PolyScalar>(form: &SymTensor4<S>, z: &[S; 4]) -> S {
    let args = &z[form.offset()..form.offset() + form.dim()];
    form.eval(args).expect("slice matches form dimension")
}
