//! Dense component arrays of arbitrary rank with no symmetry assumed.

use std::fmt;

use crate::polyalg::{Rational, Scalar};

/// All index tuples of length `rank` over `0..dim`, in lexicographic order.
pub fn index_tuples(dim: usize, rank: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(rank as u32);
    (0..total).map(move |mut flat| {
        let mut idx = vec![0; rank];
        for slot in idx.iter_mut().rev() {
            *slot = flat % dim;
            flat /= dim;
        }
        idx
    })
}

/// The 24 permutations of four positions.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (0..i).all(|j| p[i] != p[j]));
                    if distinct {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Components `A[i1..ir]` with every index ranging over `0..dim`.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseTensor<S> {
    dim: usize,
    rank: usize,
    data: Vec<S>,
}

impl<S: Scalar> DenseTensor<S> {
    pub fn zeros(dim: usize, rank: usize) -> Self {
        Self {
            dim,
            rank,
            data: vec![S::zero(); dim.pow(rank as u32)],
        }
    }

    pub fn from_fn(dim: usize, rank: usize, mut f: impl FnMut(&[usize]) -> S) -> Self {
        let data = index_tuples(dim, rank).map(|idx| f(&idx)).collect();
        Self { dim, rank, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank, "index length must equal rank");
        idx.iter().fold(0, |acc, &i| {
            assert!(i < self.dim, "index {i} out of range for dim {}", self.dim);
            acc * self.dim + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &S {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: S) {
        let o = self.offset(idx);
        self.data[o] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &S)> {
        index_tuples(self.dim, self.rank).zip(self.data.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DenseTensor<T> {
        DenseTensor {
            dim: self.dim,
            rank: self.rank,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|x| x.scale(r))
    }

    pub fn mul_scalar(&self, s: &S) -> Self {
        self.map(|x| x.clone() * s)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.dim, self.rank), (other.dim, other.rank));
        Self {
            dim: self.dim,
            rank: self.rank,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.map(|x| -x.clone()))
    }

    /// Contracts axis `axis` as an upper (contravariant) index:
    /// `B[..i..] = sum_k M[i][k] A[..k..]`.
    pub fn apply_upper(&self, axis: usize, m: &[Vec<S>]) -> Self {
        self.contract_axis(axis, |i, k| &m[i][k])
    }

    /// Contracts axis `axis` as a lower (covariant) index:
    /// `B[..j..] = sum_k M[k][j] A[..k..]`.
    pub fn apply_lower(&self, axis: usize, m: &[Vec<S>]) -> Self {
        self.contract_axis(axis, |j, k| &m[k][j])
    }

    fn contract_axis<'a>(&self, axis: usize, entry: impl Fn(usize, usize) -> &'a S) -> Self
    where
        S: 'a,
    {
        assert!(axis < self.rank);
        Self::from_fn(self.dim, self.rank, |idx| {
            let mut src = idx.to_vec();
            let mut acc = S::zero();
            for k in 0..self.dim {
                let w = entry(idx[axis], k);
                if w.is_zero() {
                    continue;
                }
                src[axis] = k;
                let a = self.get(&src);
                if !a.is_zero() {
                    acc = acc + w.clone() * a;
                }
            }
            acc
        })
    }

    /// Applies `apply_lower` with the same matrix on every axis.
    pub fn pull_back_all(&self, m: &[Vec<S>]) -> Self {
        (0..self.rank).fold(self.clone(), |t, axis| t.apply_lower(axis, m))
    }

    /// `B[t] = A[t[perm[0]], .., t[perm[r-1]]]` for a rank-4 tensor.
    pub fn permuted(&self, perm: [usize; 4]) -> Self {
        assert_eq!(self.rank, 4);
        Self::from_fn(self.dim, 4, |t| {
            self.get(&[t[perm[0]], t[perm[1]], t[perm[2]], t[perm[3]]])
                .clone()
        })
    }

    /// Averages over all 24 index permutations (rank 4 only).
    pub fn full_symmetrization(&self) -> Self {
        let perms = permutations4();
        let sum = perms
            .iter()
            .map(|&p| self.permuted(p))
            .reduce(|a, b| a.add(&b))
            .expect("24 permutations");
        sum.scale(&crate::polyalg::ratio(1, 24))
    }

    /// True when every permutation of every index tuple gives the same
    /// component (rank 4 only; checked exhaustively).
    pub fn is_fully_symmetric(&self) -> bool {
        let perms = permutations4();
        index_tuples(self.dim, 4).all(|t| {
            let base = self.get(&t);
            perms
                .iter()
                .all(|p| self.get(&[t[p[0]], t[p[1]], t[p[2]], t[p[3]]]) == base)
        })
    }
}

impl<S: Scalar> fmt::Debug for DenseTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (idx, v) in self.iter() {
            if !v.is_zero() {
                let label: Vec<usize> = idx.iter().map(|i| i + 1).collect();
                map.entry(&label, &format_args!("{v}"));
            }
        }
        map.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{rat, Rational};

    #[test]
    fn tuples_enumerate_in_order() {
        let all: Vec<_> = index_tuples(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(index_tuples(4, 4).count(), 256);
        assert_eq!(permutations4().len(), 24);
    }

    #[test]
    fn axis_contractions_match_matrix_products() {
        // vector v, matrix M: upper gives M v, lower gives M^T v
        let v = DenseTensor::from_fn(2, 1, |i| rat(i[0] as i64 + 1));
        let m = vec![vec![rat(1), rat(2)], vec![rat(3), rat(4)]];
        let up = v.apply_upper(0, &m);
        assert_eq!(up.get(&[0]), &rat(5));
        assert_eq!(up.get(&[1]), &rat(11));
        let low = v.apply_lower(0, &m);
        assert_eq!(low.get(&[0]), &rat(7));
        assert_eq!(low.get(&[1]), &rat(10));
    }

    #[test]
    fn symmetrization_is_symmetric() {
        let t: DenseTensor<Rational> =
            DenseTensor::from_fn(2, 4, |i| rat((i[0] + 2 * i[1] + 5 * i[2] * i[3]) as i64));
        assert!(!t.is_fully_symmetric());
        let s = t.full_symmetrization();
        assert!(s.is_fully_symmetric());
        assert_eq!(s.full_symmetrization(), s);
    }
}
