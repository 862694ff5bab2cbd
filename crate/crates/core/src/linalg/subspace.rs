use std::collections::{BTreeMap, HashMap};

use super::dense::Matrix;
use super::sparse::{Accumulator, SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Incremental semi-echelon basis: every stored row has leading entry 1 at a
/// distinct pivot column, and each row is zero at the pivots of rows stored
/// before it. Enough for rank, membership and kernel tracking; call
/// [`Echelon::into_subspace`] for the canonical reduced form.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        if self.rows.is_empty() || v.is_zero() {
            return v.clone();
        }
        let mut work: BTreeMap<usize, Scalar> = v.iter().map(|(i, a)| (i, a.clone())).collect();
        let mut cursor = 0usize;
        loop {
            let next = work
                .range(cursor..)
                .find(|(c, _)| self.pivot_row.contains_key(c))
                .map(|(c, a)| (*c, a.clone()));
            let Some((c, a)) = next else { break };
            let row = &self.rows[self.pivot_row[&c]];
            for (i, b) in row.iter() {
                let slot = work.entry(i).or_insert_with(Scalar::zero);
                *slot -= &(&a * b);
                if slot.is_zero() {
                    work.remove(&i);
                }
            }
            cursor = c + 1;
        }
        SparseVec::from_sorted(work.into_iter().collect())
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        self.push_reduced(r)
    }

    fn push_reduced(&mut self, r: SparseVec) -> bool {
        let Some((p, lead)) = r.leading() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        let row = r.scaled(&inv);
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::from_echelon(self)
    }
}

/// A subspace of ℚ^n stored by its reduced row-echelon basis. Equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: (0..ambient_dim).map(SparseVec::unit).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span<'a, I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            e.insert(v);
        }
        e.into_subspace()
    }

    pub fn span_owned<I: IntoIterator<Item = SparseVec>>(ambient_dim: usize, vectors: I) -> Self {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            e.insert(&v);
        }
        e.into_subspace()
    }

    /// Row space of a dense matrix.
    pub fn row_space(m: &Matrix) -> Self {
        Subspace::span_owned(m.cols(), (0..m.rows()).map(|i| SparseVec::from_dense(m.row(i))))
    }

    fn from_echelon(e: Echelon) -> Self {
        let mut order: Vec<(usize, SparseVec)> = e
            .rows
            .into_iter()
            .map(|r| (r.leading().unwrap().0, r))
            .collect();
        order.sort_by_key(|(p, _)| *p);
        let pivots: Vec<usize> = order.iter().map(|(p, _)| *p).collect();
        let pos: HashMap<usize, usize> = pivots.iter().enumerate().map(|(k, p)| (*p, k)).collect();
        let mut rows: Vec<SparseVec> = order.into_iter().map(|(_, r)| r).collect();
        // Back-substitution from the bottom: rows below are already clean.
        for k in (0..rows.len()).rev() {
            let mut acc: Option<Accumulator> = None;
            let targets: Vec<(usize, Scalar)> = rows[k]
                .iter()
                .filter(|(c, _)| *c != pivots[k] && pos.contains_key(c))
                .map(|(c, a)| (c, a.clone()))
                .collect();
            if targets.is_empty() {
                continue;
            }
            let a = acc.get_or_insert_with(Accumulator::new);
            a.add_vec(&rows[k]);
            for (c, coef) in targets {
                a.add_scaled(&-&coef, &rows[pos[&c]]);
            }
            rows[k] = acc.take().unwrap().finish();
        }
        Subspace {
            ambient_dim: e.dim,
            rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.rows.iter().map(|r| r.to_dense(self.ambient_dim)).collect())
    }

    /// `v` minus its component along the pivots; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc: Option<Accumulator> = None;
        for (k, p) in self.pivots.iter().enumerate() {
            if let Some(a) = v.get(*p) {
                acc.get_or_insert_with(|| {
                    let mut x = Accumulator::new();
                    x.add_vec(v);
                    x
                })
                .add_scaled(&-a, &self.rows[k]);
            }
        }
        match acc {
            Some(a) => a.finish(),
            None => v.clone(),
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let coords = SparseVec::from_sorted(
            self.pivots
                .iter()
                .enumerate()
                .filter_map(|(k, p)| v.get(*p).map(|a| (k, a.clone())))
                .collect(),
        );
        let mut acc = Accumulator::new();
        acc.add_vec(v);
        for (k, a) in coords.iter() {
            acc.add_scaled(&-a, &self.rows[k]);
        }
        acc.finish().is_zero().then_some(coords)
    }

    /// Element with the given basis coordinates.
    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (k, a) in coords.iter() {
            acc.add_scaled(a, &self.rows[k]);
        }
        acc.finish()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self, other)?;
        Ok(Subspace::span(self.ambient_dim, self.rows.iter().chain(&other.rows)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self, other)?;
        // x = Σ a_i u_i = Σ b_j v_j  <=>  (a, b) ∈ ker[U | -V].
        let maps: Vec<SparseVec> = self
            .rows
            .iter()
            .cloned()
            .chain(other.rows.iter().map(SparseVec::neg))
            .collect();
        let ker = kernel_of_columns(self.ambient_dim, &maps);
        let k = self.dim();
        Ok(Subspace::span_owned(
            self.ambient_dim,
            ker.iter().map(|c| self.combine(&c.slice(0..k))),
        ))
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, f: &SparseMatrix) -> Subspace {
        Subspace::span_owned(f.nrows(), self.rows.iter().map(|r| f.apply(r)))
    }
}

fn check_ambient(u: &Subspace, v: &Subspace) -> Result<()> {
    if u.ambient_dim != v.ambient_dim {
        return Err(Error::DimensionMismatch {
            context: "subspace ambient dimension".into(),
            expected: u.ambient_dim,
            found: v.ambient_dim,
        });
    }
    Ok(())
}

/// Basis (not reduced) of the kernel of the map whose columns are `cols`,
/// each a vector in ℚ^`target_dim`. Kernel vectors are in ℚ^`cols.len()`.
pub fn kernel_of_columns(target_dim: usize, cols: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new(target_dim + cols.len());
    let mut kernel = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        let aug = SparseVec::from_sorted(
            c.iter()
                .map(|(i, a)| (i, a.clone()))
                .chain(std::iter::once((target_dim + j, Scalar::one())))
                .collect(),
        );
        let r = e.reduce(&aug);
        match r.leading() {
            Some((p, _)) if p < target_dim => {
                e.push_reduced(r);
            }
            _ => kernel.push(r.slice(target_dim..target_dim + cols.len())),
        }
    }
    kernel
}

/// Reduced row-echelon form of `m`, padded with zero rows to its original
/// height, and the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let s = Subspace::row_space(m);
    let mut rows: Vec<Vec<Scalar>> = s.basis().iter().map(|r| r.to_dense(m.cols())).collect();
    while rows.len() < m.rows() {
        rows.push(vec![Scalar::zero(); m.cols()]);
    }
    let out = if m.rows() == 0 {
        Matrix::zero(0, m.cols())
    } else {
        Matrix::from_rows(rows)
    };
    (out, s.pivots().to_vec())
}

pub fn rank(m: &SparseMatrix) -> usize {
    // Eliminate along the shorter side.
    if m.ncols() <= m.nrows() {
        let mut e = Echelon::new(m.nrows());
        m.columns().iter().filter(|c| e.insert(c)).count()
    } else {
        let t = m.transpose();
        let mut e = Echelon::new(t.nrows());
        t.columns().iter().filter(|c| e.insert(c)).count()
    }
}

/// Kernel of `m` acting on column vectors.
pub fn kernel(m: &Matrix) -> Subspace {
    kernel_sparse(&m.to_sparse())
}

pub fn kernel_sparse(m: &SparseMatrix) -> Subspace {
    Subspace::span_owned(m.ncols(), kernel_of_columns(m.nrows(), m.columns()))
}

/// Joint kernel of several maps with a common domain.
pub fn joint_kernel(domain_dim: usize, maps: &[SparseMatrix]) -> Subspace {
    let mut offset = 0;
    let mut stacked = vec![SparseVec::new(); domain_dim];
    for f in maps {
        assert_eq!(f.ncols(), domain_dim);
        for (j, c) in f.columns().iter().enumerate() {
            stacked[j] = stacked[j].add(&c.shifted(offset));
        }
        offset += f.nrows();
    }
    Subspace::span_owned(domain_dim, kernel_of_columns(offset, &stacked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64) -> Scalar {
        Scalar::from_int(a)
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&Matrix::from_ints(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
        let (r, p) = rref(&Matrix::identity(3));
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        let (r, p) = rref(&Matrix::zero(2, 2));
        assert_eq!(r, Matrix::zero(2, 2));
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&Matrix::from_ints(&[&[1, 1]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&SparseVec::from_pairs([(0, q(1)), (1, q(-1))])));
        assert_eq!(kernel(&Matrix::identity(3)).dim(), 0);
        assert_eq!(kernel(&Matrix::zero(2, 3)), Subspace::full(3));
    }

    #[test]
    fn sum_and_intersection_examples() {
        let e1 = Subspace::span_owned(2, [SparseVec::unit(0)]);
        let e2 = Subspace::span_owned(2, [SparseVec::unit(1)]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(2));
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        assert!(e1.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn canonical_representation() {
        let a = Subspace::span_owned(
            3,
            [
                SparseVec::from_pairs([(0, q(2)), (1, q(2))]),
                SparseVec::from_pairs([(1, q(1)), (2, q(3))]),
            ],
        );
        let b = Subspace::span_owned(
            3,
            [
                SparseVec::from_pairs([(0, q(1)), (1, q(2)), (2, q(3))]),
                SparseVec::from_pairs([(0, q(1)), (2, q(-3))]),
            ],
        );
        assert_eq!(a, b);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                Matrix::from_rows(v.chunks(c).map(|row| row.iter().map(|&a| q(a)).collect()).collect())
            })
        })
    }

    fn subspace_in(n: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(-2i64..3, n), 0..4).prop_map(move |rows| {
            Subspace::span_owned(
                n,
                rows.into_iter()
                    .map(|r| SparseVec::from_dense(&r.into_iter().map(q).collect::<Vec<_>>())),
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let r = rank(&m.to_sparse());
            prop_assert_eq!(r + kernel(&m).dim(), m.cols());
            for v in kernel(&m).basis() {
                prop_assert!(m.apply_sparse(v).is_zero());
            }
        }

        #[test]
        fn grassmann_identity((u, v) in (1usize..6).prop_flat_map(|n| (subspace_in(n), subspace_in(n)))) {
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            prop_assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
            prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        }
    }
}
