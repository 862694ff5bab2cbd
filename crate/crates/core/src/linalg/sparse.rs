use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse vector with strictly increasing indices and no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, Scalar::one())],
        }
    }

    pub fn single(i: usize, a: Scalar) -> Self {
        if a.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(i, a)] }
        }
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(pairs: I) -> Self {
        let mut acc = Accumulator::new();
        for (i, a) in pairs {
            acc.add(i, &a);
        }
        acc.finish()
    }

    /// Trusted constructor: indices must be strictly increasing and values nonzero.
    pub(crate) fn from_sorted(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, a)| !a.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, a)| (i, a.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, a) in &self.entries {
            out[*i] = a.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, a)| (*i, a))
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, a)| (*i, a))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scaled(&self, a: &Scalar) -> SparseVec {
        if a.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, b)| (*i, b * a)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, b)| (*i, -b)).collect(),
        }
    }

    /// `self + a * other`, by sorted merge.
    pub fn add_scaled(&self, a: &Scalar, other: &SparseVec) -> SparseVec {
        if a.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut p, mut q) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while p < x.len() || q < y.len() {
            if q == y.len() || (p < x.len() && x[p].0 < y[q].0) {
                out.push(x[p].clone());
                p += 1;
            } else if p == x.len() || y[q].0 < x[p].0 {
                out.push((y[q].0, a * &y[q].1));
                q += 1;
            } else {
                let v = &x[p].1 + &(a * &y[q].1);
                if !v.is_zero() {
                    out.push((x[p].0, v));
                }
                p += 1;
                q += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Scalar::from_int(-1), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let (mut p, mut q) = (0, 0);
        let mut acc = Scalar::zero();
        while p < self.entries.len() && q < other.entries.len() {
            let (i, j) = (self.entries[p].0, other.entries[q].0);
            if i < j {
                p += 1;
            } else if j < i {
                q += 1;
            } else {
                acc += &(&self.entries[p].1 * &other.entries[q].1);
                p += 1;
                q += 1;
            }
        }
        acc
    }

    /// Reindexes entries through `f`; colliding indices are summed.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, a)| (f(*i), a.clone())))
    }

    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, a)| (i + offset, a.clone())).collect(),
        }
    }

    /// Keeps entries with index in `range`, shifted to start at zero.
    pub fn slice(&self, range: std::ops::Range<usize>) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| range.contains(i))
                .map(|(i, a)| (i - range.start, a.clone()))
                .collect(),
        }
    }

    /// Tensor product with `other`, using index `i * other_dim + j`.
    pub fn kron(&self, other: &SparseVec, other_dim: usize) -> SparseVec {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                entries.push((i * other_dim + j, a * b));
            }
        }
        SparseVec { entries }
    }
}

/// Order-preserving scratch accumulator for building sparse sums.
#[derive(Default)]
pub struct Accumulator {
    map: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator { map: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, a: &Scalar) {
        if a.is_zero() {
            return;
        }
        let slot = self.map.entry(i).or_insert_with(Scalar::zero);
        *slot += a;
    }

    pub fn add_scaled(&mut self, a: &Scalar, v: &SparseVec) {
        if a.is_zero() {
            return;
        }
        for (i, b) in v.iter() {
            self.add(i, &(a * b));
        }
    }

    pub fn add_vec(&mut self, v: &SparseVec) {
        for (i, b) in v.iter() {
            self.add(i, b);
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec {
            entries: self.map.into_iter().filter(|(_, a)| !a.is_zero()).collect(),
        }
    }
}

/// Column-major sparse matrix; `cols[j]` is the image of the j-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            nrows: n,
            cols: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|m| m < nrows)));
        SparseMatrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols() && self.cols.iter().enumerate().all(|(j, c)| *c == SparseVec::unit(j))
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        match v.nnz() {
            0 => SparseVec::new(),
            1 => {
                let (j, a) = v.leading().unwrap();
                self.cols[j].scaled(a)
            }
            _ => {
                let mut acc = Accumulator::new();
                for (j, a) in v.iter() {
                    acc.add_scaled(a, &self.cols[j]);
                }
                acc.finish()
            }
        }
    }

    /// Composition `self ∘ rhs`.
    pub fn compose(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), rhs.nrows, "composition shape mismatch");
        SparseMatrix {
            nrows: self.nrows,
            cols: rhs.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, a) in c.iter() {
                rows[i].push((j, a.clone()));
            }
        }
        SparseMatrix {
            nrows: self.ncols(),
            cols: rows.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(&Scalar::from_int(-1), other)
    }

    pub fn add_scaled(&self, a: &Scalar, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols()), (other.nrows, other.ncols()), "shape mismatch");
        SparseMatrix {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(x, y)| x.add_scaled(a, y))
                .collect(),
        }
    }

    pub fn scaled(&self, a: &Scalar) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            cols: self.cols.iter().map(|c| c.scaled(a)).collect(),
        }
    }

    /// Kronecker product; index `(i, k) -> i * other.nrows + k`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut cols = Vec::with_capacity(self.ncols() * other.ncols());
        for a in &self.cols {
            for b in &other.cols {
                cols.push(a.kron(b, other.nrows));
            }
        }
        SparseMatrix {
            nrows: self.nrows * other.nrows,
            cols,
        }
    }

    pub fn pow(&self, k: usize) -> SparseMatrix {
        let mut out = SparseMatrix::identity(self.nrows);
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    /// Columns restricted to the given column indices.
    pub fn select_columns(&self, idx: &[usize]) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            cols: idx.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.cols
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(pairs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_pairs(pairs.iter().map(|&(i, a)| (i, Scalar::from_int(a))))
    }

    #[test]
    fn merge_cancels_to_zero() {
        let x = v(&[(0, 1), (3, 2)]);
        let y = v(&[(3, 2), (5, 1)]);
        assert_eq!(x.sub(&y), v(&[(0, 1), (5, -1)]));
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn compose_and_transpose() {
        let a = SparseMatrix::from_columns(2, vec![v(&[(0, 1)]), v(&[(0, 1), (1, 1)])]);
        let b = SparseMatrix::from_columns(2, vec![v(&[(1, 1)]), v(&[(0, 1)])]);
        let ab = a.compose(&b);
        assert_eq!(ab.col(0), &v(&[(0, 1), (1, 1)]));
        assert_eq!(ab.col(1), &v(&[(0, 1)]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().get(1, 0), Scalar::one());
    }

    #[test]
    fn kron_dims() {
        let a = SparseMatrix::identity(2);
        let b = SparseMatrix::identity(3);
        assert!(a.kron(&b).is_identity());
    }
}
