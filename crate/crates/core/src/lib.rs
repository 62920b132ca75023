//! Exact quartic-form invariants of cubic transformations of the real plane.
//!
//! A cubic map `y^i = F^i_{mnp} x^m x^n x^p + ...` carries a coefficient tensor
//! `F`. From `F` this crate builds six 2x2 determinants `G` and six quartic
//! forms `omega[1..6]`, constructs the forms three independent ways, and checks
//! their transformation laws under coordinate changes and affine
//! compositions as exact polynomial identities.
//!
//! Modules:
//! - [`polyalg`]: rationals, sparse polynomials, parsing, substitution.
//! - [`cubicmap`]: cubic maps, the coefficient tensor, compositions.
//! - [`invariants`]: determinants, the quartic forms and their constructions.
//! - [`transforms`]: coordinate-change machinery and law checkers.

pub mod cubicmap;
pub mod invariants;
pub mod polyalg;
pub mod tensor;
pub mod transforms;

pub use cubicmap::{AffineMap, CoeffTensor, CubicMap, Matrix2};
pub use invariants::{FormSource, GSet, SymTensor4};
pub use polyalg::{MultiPoly, Rational, Scalar};
