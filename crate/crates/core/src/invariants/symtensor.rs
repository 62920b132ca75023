use std::collections::BTreeMap;

use num_traits::Zero;

use super::InvariantError;
use crate::polyalg::{rat, ratio, Monomial, MultiPoly, PolyScalar, Rational, Scalar};
use crate::tensor::{index_tuples, DenseTensor};

pub const Z_VARS: [&str; 4] = ["z1", "z2", "z3", "z4"];

/// A fully symmetric rank-4 covariant tensor, i.e. a quartic form
/// `omega(z) = sum over all (i,m,n,p) of Omega_{imnp} z^i z^m z^n z^p`.
///
/// Only non-decreasing index tuples are stored. `offset` places the form on
/// the variables `z_{offset+1} .. z_{offset+dim}`: a binary form on `(z3, z4)`
/// has `dim = 2`, `offset = 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymTensor4<S> {
    dim: usize,
    offset: usize,
    comps: BTreeMap<[usize; 4], S>,
}

/// Number of distinct orderings of a sorted index tuple.
pub fn multiplicity(sorted: &[usize; 4]) -> i64 {
    let mut counts = [0usize; 4];
    for &i in sorted {
        counts[i] += 1;
    }
    let fact = |n: usize| (1..=n as i64).product::<i64>();
    24 / counts.iter().map(|&c| fact(c)).product::<i64>()
}

fn sorted(mut idx: [usize; 4]) -> [usize; 4] {
    idx.sort_unstable();
    idx
}

impl<S: Scalar> SymTensor4<S> {
    pub fn zero(dim: usize, offset: usize) -> Self {
        assert!(dim == 2 || dim == 4, "dim must be 2 or 4");
        assert!(offset + dim <= 4);
        Self {
            dim,
            offset,
            comps: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn variables(&self) -> &'static [&'static str] {
        &Z_VARS[self.offset..self.offset + self.dim]
    }

    /// Component for an arbitrary index order (indices relative to `offset`).
    pub fn get(&self, idx: [usize; 4]) -> S {
        self.comps
            .get(&sorted(idx))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    /// Stored nonzero components, keyed by sorted relative index tuples.
    pub fn components(&self) -> impl Iterator<Item = (&[usize; 4], &S)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    fn insert(&mut self, idx: [usize; 4], value: S) {
        if value.is_zero() {
            self.comps.remove(&idx);
        } else {
            self.comps.insert(idx, value);
        }
    }

    /// Reads the sorted-tuple components of a dense array. The array is
    /// assumed fully symmetric; only one representative per orbit is read.
    pub fn from_dense(dense: &DenseTensor<S>, offset: usize) -> Self {
        assert_eq!(dense.rank(), 4);
        let mut out = Self::zero(dense.dim(), offset);
        for t in index_tuples(dense.dim(), 4) {
            let key = [t[0], t[1], t[2], t[3]];
            if sorted(key) == key {
                out.insert(key, dense.get(&t).clone());
            }
        }
        out
    }

    pub fn to_dense(&self) -> DenseTensor<S> {
        DenseTensor::from_fn(self.dim, 4, |t| self.get([t[0], t[1], t[2], t[3]]))
    }

    /// Builds the tensor from form coefficients keyed by relative exponent
    /// vectors; each coefficient is divided by the multiplicity of its
    /// index multiset.
    pub fn from_coefficients<I>(dim: usize, offset: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, S)>,
    {
        let mut out = Self::zero(dim, offset);
        for (exps, c) in coeffs {
            assert_eq!(exps.len(), dim);
            assert_eq!(exps.iter().sum::<u32>(), 4, "quartic monomials only");
            let mut idx = Vec::with_capacity(4);
            for (v, &e) in exps.iter().enumerate() {
                idx.extend(std::iter::repeat_n(v, e as usize));
            }
            let key: [usize; 4] = idx.try_into().expect("four indices");
            let value = out.get(key) + c.scale(&ratio(1, multiplicity(&key)));
            out.insert(key, value);
        }
        out
    }

    /// Form coefficients (component times multiplicity) keyed by the
    /// absolute exponent vector over `z1..z4`.
    pub fn coefficients(&self) -> BTreeMap<[u32; 4], S> {
        self.comps
            .iter()
            .map(|(idx, c)| {
                let mut exps = [0u32; 4];
                for &i in idx {
                    exps[i + self.offset] += 1;
                }
                (exps, c.scale(&rat(multiplicity(idx))))
            })
            .collect()
    }

    /// `sum over all index tuples of Omega_{imnp} z^i z^m z^n z^p`.
    pub fn eval(&self, z: &[S]) -> Result<S, InvariantError> {
        if z.len() != self.dim {
            return Err(InvariantError::DimensionMismatch {
                expected: self.dim,
                found: z.len(),
            });
        }
        let mut acc = S::zero();
        for (idx, c) in &self.comps {
            let term = idx
                .iter()
                .fold(c.scale(&rat(multiplicity(idx))), |t, &i| t * &z[i]);
            acc = acc + term;
        }
        Ok(acc)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SymTensor4<T> {
        let mut out = SymTensor4::zero(self.dim, self.offset);
        for (k, v) in &self.comps {
            out.insert(*k, f(v));
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|x| x.scale(r))
    }

    pub fn mul_scalar(&self, s: &S) -> Self {
        self.map(|x| x.clone() * s)
    }

    /// Componentwise difference; both operands must live on the same variables.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.dim, self.offset), (other.dim, other.offset));
        let mut out = self.clone();
        for (k, v) in &other.comps {
            let value = out.get(*k) - v;
            out.insert(*k, value);
        }
        out
    }

    /// `Omega~_{abcd} = Omega_{imnp} M^i_a M^m_b M^n_c M^p_d`.
    pub fn pull_back(&self, m: &[Vec<S>]) -> Self {
        assert_eq!(m.len(), self.dim);
        Self::from_dense(&self.to_dense().pull_back_all(m), self.offset)
    }
}

impl<S: PolyScalar> SymTensor4<S> {
    /// The form as a polynomial in its `z` variables.
    pub fn to_poly(&self) -> MultiPoly {
        self.coefficients()
            .into_iter()
            .fold(MultiPoly::zero(), |acc, (exps, c)| {
                let m = Monomial::from_pairs(Z_VARS.iter().copied().zip(exps));
                acc + c.to_poly() * MultiPoly::term(Rational::from_integer(1.into()), m)
            })
    }

    /// Inverse of [`to_poly`](Self::to_poly). Fails if the polynomial uses
    /// variables outside the form's range, is not homogeneous quartic in
    /// them, or has coefficients not representable in `S`.
    pub fn from_poly(dim: usize, offset: usize, p: &MultiPoly) -> Result<Self, InvariantError> {
        let vars = &Z_VARS[offset..offset + dim];
        let grouped = p.collect_in(&Z_VARS);
        let mut coeffs = Vec::with_capacity(grouped.len());
        for (m, c) in grouped {
            if m.variables().any(|v| !vars.contains(&v)) || m.degree() != 4 {
                return Err(InvariantError::NotAQuarticForm(p.to_string()));
            }
            let exps: Vec<u32> = vars.iter().map(|v| m.exponent(v)).collect();
            let c = S::from_poly(c).ok_or(InvariantError::NonRational)?;
            coeffs.push((exps, c));
        }
        Ok(Self::from_coefficients(dim, offset, coeffs))
    }
}
