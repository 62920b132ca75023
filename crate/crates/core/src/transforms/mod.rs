//! Block lifts, the pseudotensor transformation law, and checkers for the
//! transformation behaviour of the determinants and forms.

mod hat;
mod laws;
mod pseudo;
mod random;
mod suite;

use thiserror::Error;

use crate::invariants::InvariantError;

pub use hat::{hat_matrix, rows_for_dim, Matrix4Block};
pub use laws::{
    check_tensoriality, composed_determinant_check, equivalence_law_check, left_law_check,
    right_law_check, symbolic_composed_check, ComposedRow, LawReport, Residual,
};
pub use pseudo::{pseudo_transform, PseudoSpec};
pub use random::{trial_seed, TrialRng, DEN_BOUND, NUM_BOUND};
pub use suite::{run_suite, run_trial, CheckRow, SuiteConfig, LAWS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("array has rank {} and dimension {}, expected rank {} and dimension {}", found.0, found.1, expected.0, expected.1)]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}
