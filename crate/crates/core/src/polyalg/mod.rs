//! Exact rational scalars and sparse multivariate polynomials.
//!
//! This is the arithmetic kernel for every other module, and doubles as the
//! brute-force expansion oracle that the tensor formulas are checked against.

mod monomial;
mod parse;
mod poly;
mod scalar;

use thiserror::Error;

pub use monomial::Monomial;
pub use parse::{parse_poly, parse_rational};
pub use poly::MultiPoly;
pub use scalar::{rat, ratio, PolyScalar, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },
    #[error("malformed exponent at column {column}")]
    MalformedExponent { column: usize },
    #[error("zero denominator at column {column}")]
    ZeroDenominator { column: usize },
    #[error("unexpected `{found}` at column {column}")]
    Unexpected { found: String, column: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("empty polynomial")]
    Empty,
    #[error("no substitution given for variable `{0}`")]
    MissingSubstitution(String),
}
