//! Cubic transformations of the plane and their coefficient tensor.
//!
//! A map `y^i = F^i_{mnp} x^m x^n x^p + (lower degree)` is stored as two
//! polynomials in `x1`, `x2`. Its cubic part defines the tensor `F`, fully
//! symmetric in the three lower indices. Compositions with affine maps are
//! carried out on the full polynomials; the index formulas for `F` are
//! provided separately so the two routes can be compared.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyalg::{
    parse_poly, parse_rational, rat, Monomial, MultiPoly, PolyError, Rational, Scalar,
};
use crate::tensor::DenseTensor;

pub const X_VARS: [&str; 2] = ["x1", "x2"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicMapError {
    #[error("line {line}: {error}")]
    Parse { line: usize, error: PolyError },
    #[error("component {component} has degree {degree}, exceeding 3")]
    DegreeTooHigh { component: String, degree: u32 },
    #[error("component {component} uses variable `{var}`; only x1, x2 are allowed")]
    ForeignVariable { component: String, var: String },
    #[error("missing line `{0} = ...`")]
    MissingComponent(&'static str),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("matrix is singular")]
    SingularMatrix,
}

/// A 2x2 matrix `M[i][j]`, read as `M^i_j` (row = upper index).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix2<S> {
    pub m: [[S; 2]; 2],
}

impl<S: Scalar> Matrix2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Self {
            m: [[a, b], [c, d]],
        }
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.m[i][j]
    }

    pub fn det(&self) -> S {
        self.m[0][0].clone() * &self.m[1][1] - self.m[0][1].clone() * &self.m[1][0]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let e = |i: usize, j: usize| {
            self.m[i][0].clone() * &other.m[0][j] + self.m[i][1].clone() * &other.m[1][j]
        };
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        self.m.iter().map(|r| r.to_vec()).collect()
    }

    pub fn apply(&self, v: &[S; 2]) -> [S; 2] {
        let e = |i: usize| self.m[i][0].clone() * &v[0] + self.m[i][1].clone() * &v[1];
        [e(0), e(1)]
    }

    /// The matrix entries in the order `(M^1_1, M^2_1, M^1_2, M^2_2)`, i.e.
    /// column by column. This is how a matrix is read as a point `z` of
    /// the four-dimensional space.
    pub fn as_point(&self) -> [S; 4] {
        [
            self.m[0][0].clone(),
            self.m[1][0].clone(),
            self.m[0][1].clone(),
            self.m[1][1].clone(),
        ]
    }
}

impl Matrix2<Rational> {
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(rat(a), rat(b), rat(c), rat(d))
    }

    pub fn inverse(&self) -> Result<Self, CubicMapError> {
        let det = self.det();
        if det.is_zero() {
            return Err(CubicMapError::SingularMatrix);
        }
        let inv = Rational::one() / det;
        Ok(Self::new(
            &self.m[1][1] * &inv,
            -(&self.m[0][1] * &inv),
            -(&self.m[1][0] * &inv),
            &self.m[0][0] * &inv,
        ))
    }

    pub fn to_poly(&self) -> Matrix2<MultiPoly> {
        Matrix2 {
            m: self.m.clone().map(|r| r.map(MultiPoly::constant)),
        }
    }
}

impl Matrix2<MultiPoly> {
    /// Matrix of indeterminates `T1_1, T1_2, T2_1, T2_2` (named `{prefix}i_j`).
    pub fn symbolic(prefix: &str) -> Self {
        let v = |i: usize, j: usize| MultiPoly::var(&format!("{prefix}{i}_{j}"));
        Self::new(v(1, 1), v(1, 2), v(2, 1), v(2, 2))
    }
}

impl<S: Scalar> fmt::Display for Matrix2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

/// `y^i = T^i_m x^m + a^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMap {
    pub linear: Matrix2<Rational>,
    pub shift: [Rational; 2],
}

impl AffineMap {
    pub fn linear(t: Matrix2<Rational>) -> Self {
        Self {
            linear: t,
            shift: [Rational::zero(), Rational::zero()],
        }
    }

    pub fn identity() -> Self {
        Self::linear(Matrix2::identity())
    }

    pub fn inverse(&self) -> Result<Self, CubicMapError> {
        let s = self.linear.inverse()?;
        let sa = s.apply(&self.shift);
        Ok(Self {
            linear: s,
            shift: [-sa[0].clone(), -sa[1].clone()],
        })
    }

    /// Matrix file text: two matrix rows, then the shift line if nonzero.
    pub fn to_text(&self) -> String {
        let m = &self.linear.m;
        let mut out = format!("{} {}\n{} {}\n", m[0][0], m[0][1], m[1][0], m[1][1]);
        if self.shift.iter().any(|a| !a.is_zero()) {
            out.push_str(&format!("a = {} {}\n", self.shift[0], self.shift[1]));
        }
        out
    }
}

/// Parses a matrix file: two lines of two rationals, optionally followed by
/// `a = <r> <r>`. `#` starts a comment.
pub fn parse_matrix_file(text: &str) -> Result<AffineMap, CubicMapError> {
    let mut rows: Vec<[Rational; 2]> = Vec::new();
    let mut shift: Option<[Rational; 2]> = None;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (is_shift, body) = match line.strip_prefix('a') {
            Some(rest) if rest.trim_start().starts_with('=') => {
                (true, rest.trim_start()[1..].trim())
            }
            _ => (false, line),
        };
        let nums: Vec<&str> = body.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(CubicMapError::Malformed {
                line: line_no,
                message: format!("expected two rationals, found {}", nums.len()),
            });
        }
        let parse = |s: &str| {
            parse_rational(s).map_err(|error| CubicMapError::Parse {
                line: line_no,
                error,
            })
        };
        let pair = [parse(nums[0])?, parse(nums[1])?];
        if is_shift {
            if shift.is_some() {
                return Err(CubicMapError::Malformed {
                    line: line_no,
                    message: "duplicate shift line".into(),
                });
            }
            shift = Some(pair);
        } else {
            if rows.len() == 2 || shift.is_some() {
                return Err(CubicMapError::Malformed {
                    line: line_no,
                    message: "a matrix has exactly two rows, before the shift line".into(),
                });
            }
            rows.push(pair);
        }
    }
    if rows.len() != 2 {
        return Err(CubicMapError::Malformed {
            line: text.lines().count(),
            message: format!("expected two matrix rows, found {}", rows.len()),
        });
    }
    let [r0, r1]: [[Rational; 2]; 2] = rows.try_into().expect("two rows");
    Ok(AffineMap {
        linear: Matrix2 { m: [r0, r1] },
        shift: shift.unwrap_or_else(|| [Rational::zero(), Rational::zero()]),
    })
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// A plane map whose two components are polynomials of degree at most 3 in
/// `x1`, `x2`. Lower-degree terms are kept.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicMap {
    y: [MultiPoly; 2],
}

impl CubicMap {
    pub fn new(y1: MultiPoly, y2: MultiPoly) -> Result<Self, CubicMapError> {
        for (name, p) in [("y1", &y1), ("y2", &y2)] {
            if let Some(var) = p
                .variables()
                .into_iter()
                .find(|v| !X_VARS.contains(&v.as_str()))
            {
                return Err(CubicMapError::ForeignVariable {
                    component: name.into(),
                    var,
                });
            }
            if let Some(degree) = p.degree().filter(|&d| d > 3) {
                return Err(CubicMapError::DegreeTooHigh {
                    component: name.into(),
                    degree,
                });
            }
        }
        Ok(Self { y: [y1, y2] })
    }

    /// Parses a map file with lines `y1 = <poly>` and `y2 = <poly>`.
    pub fn parse(text: &str) -> Result<Self, CubicMapError> {
        let mut comps: [Option<MultiPoly>; 2] = [None, None];
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line
                .split_once('=')
                .ok_or_else(|| CubicMapError::Malformed {
                    line: line_no,
                    message: "expected `y1 = ...` or `y2 = ...`".into(),
                })?;
            let slot = match lhs.trim() {
                "y1" => 0,
                "y2" => 1,
                other => {
                    return Err(CubicMapError::Malformed {
                        line: line_no,
                        message: format!("unknown component `{other}`"),
                    })
                }
            };
            if comps[slot].is_some() {
                return Err(CubicMapError::Malformed {
                    line: line_no,
                    message: format!("duplicate component y{}", slot + 1),
                });
            }
            let poly = parse_poly(rhs, &X_VARS).map_err(|e| CubicMapError::Parse {
                line: line_no,
                error: shift_column(e, lhs.len() + 1),
            })?;
            if let Some(degree) = poly.degree().filter(|&d| d > 3) {
                return Err(CubicMapError::Malformed {
                    line: line_no,
                    message: format!("y{} has degree {degree}, exceeding 3", slot + 1),
                });
            }
            comps[slot] = Some(poly);
        }
        let [y1, y2] = comps;
        let y1 = y1.ok_or(CubicMapError::MissingComponent("y1"))?;
        let y2 = y2.ok_or(CubicMapError::MissingComponent("y2"))?;
        Self::new(y1, y2)
    }

    pub fn component(&self, i: usize) -> &MultiPoly {
        &self.y[i]
    }

    pub fn components(&self) -> &[MultiPoly; 2] {
        &self.y
    }

    /// Canonical map-file text.
    pub fn to_text(&self) -> String {
        format!("y1 = {}\ny2 = {}\n", self.y[0], self.y[1])
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            y: [
                self.y[0].clone() + &other.y[0],
                self.y[1].clone() + &other.y[1],
            ],
        }
    }
}

fn shift_column(e: PolyError, by: usize) -> PolyError {
    match e {
        PolyError::UnknownVariable { name, column } => PolyError::UnknownVariable {
            name,
            column: column + by,
        },
        PolyError::MalformedExponent { column } => PolyError::MalformedExponent {
            column: column + by,
        },
        PolyError::ZeroDenominator { column } => PolyError::ZeroDenominator {
            column: column + by,
        },
        PolyError::Unexpected { found, column } => PolyError::Unexpected {
            found,
            column: column + by,
        },
        other => other,
    }
}

/// The `(1,3)` coefficient tensor `F^i_{mnp}`, indices 0-based, axis 0 upper.
#[derive(Clone, PartialEq, Eq)]
pub struct CoeffTensor<S> {
    t: DenseTensor<S>,
}

impl<S: Scalar> fmt::Debug for CoeffTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("CoeffTensor").field(&self.t).finish()
    }
}

/// Lower multi-indices represented by their count of `2`s: 111, 112, 122, 222.
pub const LOWER_CLASSES: [&str; 4] = ["111", "112", "122", "222"];

impl<S: Scalar> CoeffTensor<S> {
    pub fn zero() -> Self {
        Self {
            t: DenseTensor::zeros(2, 4),
        }
    }

    /// Builds the tensor from its eight independent components, indexed by
    /// upper index and by the number of `2`s among the lower indices.
    pub fn from_independent(values: [[S; 4]; 2]) -> Self {
        Self {
            t: DenseTensor::from_fn(2, 4, |idx| {
                let k = idx[1..].iter().filter(|&&i| i == 1).count();
                values[idx[0]][k].clone()
            }),
        }
    }

    /// Wraps an arbitrary rank-4 array; no symmetry is enforced.
    pub fn from_dense(t: DenseTensor<S>) -> Self {
        assert_eq!((t.dim(), t.rank()), (2, 4));
        Self { t }
    }

    pub fn get(&self, i: usize, m: usize, n: usize, p: usize) -> &S {
        self.t.get(&[i, m, n, p])
    }

    /// Component `F^i_{lower}` where `k` counts the `2`s among the lower indices.
    pub fn independent(&self, i: usize, k: usize) -> &S {
        let lower: Vec<usize> = (0..3).map(|slot| usize::from(slot >= 3 - k)).collect();
        self.t.get(&[i, lower[0], lower[1], lower[2]])
    }

    pub fn dense(&self) -> &DenseTensor<S> {
        &self.t
    }

    pub fn is_lower_symmetric(&self) -> bool {
        crate::tensor::index_tuples(2, 4).all(|idx| {
            let v = self.t.get(&idx);
            let (i, m, n, p) = (idx[0], idx[1], idx[2], idx[3]);
            [
                [i, n, m, p],
                [i, p, n, m],
                [i, m, p, n],
                [i, n, p, m],
                [i, p, m, n],
            ]
            .iter()
            .all(|o| self.t.get(o) == v)
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            t: self.t.add(&other.t),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> CoeffTensor<T> {
        CoeffTensor { t: self.t.map(f) }
    }
}

impl CoeffTensor<MultiPoly> {
    pub fn var_name(i: usize, k: usize) -> String {
        format!("F{}_{}", i + 1, LOWER_CLASSES[k])
    }

    /// The eight indeterminate names `F1_111 .. F2_222`.
    pub fn var_names() -> Vec<String> {
        (0..2)
            .flat_map(|i| (0..4).map(move |k| Self::var_name(i, k)))
            .collect()
    }

    /// Tensor whose eight independent components are indeterminates.
    pub fn symbolic() -> Self {
        let v = |i, k| MultiPoly::var(&Self::var_name(i, k));
        Self::from_independent([
            [v(0, 0), v(0, 1), v(0, 2), v(0, 3)],
            [v(1, 0), v(1, 1), v(1, 2), v(1, 3)],
        ])
    }
}

fn cubic_monomial(k: usize) -> Monomial {
    Monomial::from_pairs([("x1", 3 - k as u32), ("x2", k as u32)])
}

/// Reads the coefficient tensor off two polynomials, treating every variable
/// other than `x1`, `x2` as part of the coefficients.
pub fn cubic_coefficients(y: &[MultiPoly; 2]) -> CoeffTensor<MultiPoly> {
    let multiplicity = [1, 3, 3, 1];
    let values = [0, 1].map(|i| {
        [0, 1, 2, 3].map(|k| {
            y[i].coefficient_of(&cubic_monomial(k), &X_VARS)
                .scale(&crate::polyalg::ratio(1, multiplicity[k]))
        })
    });
    CoeffTensor::from_independent(values)
}

/// `y^i = F^i_111 x1^3 + 3 F^i_112 x1^2 x2 + 3 F^i_122 x1 x2^2 + F^i_222 x2^3`.
pub fn cubic_polys<S: crate::polyalg::PolyScalar>(f: &CoeffTensor<S>) -> [MultiPoly; 2] {
    let multiplicity = [1, 3, 3, 1];
    [0, 1].map(|i| {
        (0..4).fold(MultiPoly::zero(), |acc, k| {
            acc + f.independent(i, k).to_poly().scale(&rat(multiplicity[k]))
                * MultiPoly::term(Rational::one(), cubic_monomial(k))
        })
    })
}

/// Substitutes `x^i -> T^i_m x^m + a^i` into each polynomial.
pub fn right_compose_polys(
    y: &[MultiPoly; 2],
    linear: &Matrix2<MultiPoly>,
    shift: &[MultiPoly; 2],
) -> [MultiPoly; 2] {
    let map: BTreeMap<String, MultiPoly> = (0..2)
        .map(|i| {
            let image = linear.m[i][0].clone() * MultiPoly::var("x1")
                + linear.m[i][1].clone() * MultiPoly::var("x2")
                + &shift[i];
            (X_VARS[i].to_string(), image)
        })
        .collect();
    [y[0].subst_partial(&map), y[1].subst_partial(&map)]
}

/// Coefficient tensor of the cubic part; lower-degree terms are ignored.
pub fn coeff_tensor(f: &CubicMap) -> CoeffTensor<Rational> {
    cubic_coefficients(&f.y).map(|p| p.as_constant().expect("map coefficients are rational"))
}

/// `f = ftilde o phi`.
pub fn compose_right(ftilde: &CubicMap, phi: &AffineMap) -> CubicMap {
    let shift = phi.shift.clone().map(MultiPoly::constant);
    let y = right_compose_polys(&ftilde.y, &phi.linear.to_poly(), &shift);
    CubicMap { y }
}

/// `f = phi^{-1} o ftilde`; needs an invertible linear part.
pub fn compose_left(ftilde: &CubicMap, phi: &AffineMap) -> Result<CubicMap, CubicMapError> {
    let inv = phi.inverse()?;
    let s = inv.linear.to_poly();
    let y = [0, 1].map(|i| {
        s.m[i][0].clone() * &ftilde.y[0]
            + s.m[i][1].clone() * &ftilde.y[1]
            + &MultiPoly::constant(inv.shift[i].clone())
    });
    Ok(CubicMap { y })
}

/// `F^i_{mnp} = Ftilde^i_{abc} T^a_m T^b_n T^c_p` (right composition).
pub fn right_composed_tensor<S: Scalar>(ftilde: &CoeffTensor<S>, t: &Matrix2<S>) -> CoeffTensor<S> {
    let rows = t.rows();
    let d = (1..4).fold(ftilde.t.clone(), |acc, axis| acc.apply_lower(axis, &rows));
    CoeffTensor { t: d }
}

/// `F^i_{mnp} = S^i_a Ftilde^a_{mnp}` (left composition with `phi^{-1}`, `S = T^{-1}`).
pub fn left_composed_tensor<S: Scalar>(ftilde: &CoeffTensor<S>, s: &Matrix2<S>) -> CoeffTensor<S> {
    CoeffTensor {
        t: ftilde.t.apply_upper(0, &s.rows()),
    }
}

/// Two-sided equivalence: `F^i_{mnp} = Ftilde^a_{bcd} S1^i_a T2^b_m T2^c_n T2^d_p`.
pub fn equivalence_tensor<S: Scalar>(
    ftilde: &CoeffTensor<S>,
    s1: &Matrix2<S>,
    t2: &Matrix2<S>,
) -> CoeffTensor<S> {
    left_composed_tensor(&right_composed_tensor(ftilde, t2), s1)
}

/// Components of `F` in new coordinates, `x = S x~`:
/// `F~^i_{mnp} = F^a_{bcd} T^i_a S^b_m S^c_n S^d_p` with `T = S^{-1}`.
pub fn change_coordinates(
    f: &CoeffTensor<Rational>,
    s: &Matrix2<Rational>,
) -> Result<CoeffTensor<Rational>, CubicMapError> {
    let t = s.inverse()?;
    Ok(equivalence_tensor(f, &t, s))
}

/// Inverse of [`change_coordinates`]:
/// `F^i_{mnp} = F~^a_{bcd} S^i_a T^b_m T^c_n T^d_p`.
pub fn restore_coordinates(
    ftilde: &CoeffTensor<Rational>,
    s: &Matrix2<Rational>,
) -> Result<CoeffTensor<Rational>, CubicMapError> {
    let t = s.inverse()?;
    Ok(equivalence_tensor(ftilde, s, &t))
}
