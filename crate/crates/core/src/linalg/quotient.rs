use super::sparse::{SparseMatrix, SparseVec};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// The quotient ℚ^n / K. Its basis is the images of the standard basis
/// vectors at the non-pivot columns of K's reduced echelon form, so a
/// projection is "reduce modulo K, then read off the free columns".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    killed: Subspace,
    free: Vec<usize>,
    // position of each ambient column among `free`, if it is free
    slot: Vec<Option<usize>>,
}

impl QuotientSpace {
    pub fn new(killed: Subspace) -> Self {
        let n = killed.ambient_dim();
        let mut slot = vec![None; n];
        let mut is_pivot = vec![false; n];
        for &p in killed.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
        for (k, &i) in free.iter().enumerate() {
            slot[i] = Some(k);
        }
        QuotientSpace { killed, free, slot }
    }

    pub fn identity(n: usize) -> Self {
        QuotientSpace::new(Subspace::zero(n))
    }

    pub fn ambient_dim(&self) -> usize {
        self.killed.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn killed(&self) -> &Subspace {
        &self.killed
    }

    /// Ambient indices whose classes form the quotient basis.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let r = self.killed.reduce(v);
        SparseVec::from_pairs(r.iter().map(|(i, a)| {
            let k = self.slot[i].expect("reduced vector supported on free columns");
            (k, a.clone())
        }))
    }

    /// Canonical representative of a class given in quotient coordinates.
    pub fn section(&self, c: &SparseVec) -> SparseVec {
        c.reindex(|k| self.free[k])
    }

    pub fn projection_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(
            self.dim(),
            (0..self.ambient_dim()).map(|i| self.project(&SparseVec::unit(i))).collect(),
        )
    }

    pub fn section_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(
            self.ambient_dim(),
            self.free.iter().map(|&i| SparseVec::unit(i)).collect(),
        )
    }

    /// Matrix of the map `dom -> cod` induced by an ambient map `f`.
    /// Fails with `WellDefinedness` if `f` does not carry the killed
    /// subspace of `dom` into that of `cod`.
    pub fn induced_map(f: &SparseMatrix, dom: &QuotientSpace, cod: &QuotientSpace) -> Result<SparseMatrix> {
        check_shape(f, dom.ambient_dim(), cod.ambient_dim())?;
        for (k, v) in dom.killed.basis().iter().enumerate() {
            if !cod.killed.contains(&f.apply(v)) {
                return Err(Error::WellDefinedness(format!(
                    "image of relation {k} is not a relation in the target"
                )));
            }
        }
        Ok(Self::induced_map_unchecked(f, dom, cod))
    }

    /// As [`QuotientSpace::induced_map`], trusting that `f` descends.
    pub fn induced_map_unchecked(f: &SparseMatrix, dom: &QuotientSpace, cod: &QuotientSpace) -> SparseMatrix {
        SparseMatrix::from_columns(
            cod.dim(),
            dom.free.iter().map(|&i| cod.project(f.col(i))).collect(),
        )
    }
}

fn check_shape(f: &SparseMatrix, dom: usize, cod: usize) -> Result<()> {
    if f.ncols() != dom {
        return Err(Error::DimensionMismatch {
            context: "map domain".into(),
            expected: dom,
            found: f.ncols(),
        });
    }
    if f.nrows() != cod {
        return Err(Error::DimensionMismatch {
            context: "map codomain".into(),
            expected: cod,
            found: f.nrows(),
        });
    }
    Ok(())
}

/// Matrix of `f` restricted to `dom -> cod`, in the RREF bases of the two
/// subspaces. Fails with `Restriction` if some image leaves `cod`.
pub fn restrict(f: &SparseMatrix, dom: &Subspace, cod: &Subspace) -> Result<SparseMatrix> {
    check_shape(f, dom.ambient_dim(), cod.ambient_dim())?;
    let mut cols = Vec::with_capacity(dom.dim());
    for (k, v) in dom.basis().iter().enumerate() {
        match cod.coordinates(&f.apply(v)) {
            Some(c) => cols.push(c),
            None => {
                return Err(Error::Restriction(format!(
                    "image of basis vector {k} is outside the target subspace"
                )))
            }
        }
    }
    Ok(SparseMatrix::from_columns(cod.dim(), cols))
}

/// Inclusion of a subspace into its ambient space.
pub fn inclusion(s: &Subspace) -> SparseMatrix {
    SparseMatrix::from_columns(s.ambient_dim(), s.basis().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn q(a: i64) -> Scalar {
        Scalar::from_int(a)
    }

    #[test]
    fn quotient_by_diagonal() {
        // ℚ² / span(1,1): both basis vectors map to the same class.
        let k = Subspace::span_owned(2, [SparseVec::from_pairs([(0, q(1)), (1, q(1))])]);
        let qs = QuotientSpace::new(k);
        assert_eq!(qs.dim(), 1);
        assert_eq!(qs.project(&SparseVec::unit(0)).get(0), Some(&q(-1)));
        assert_eq!(qs.project(&SparseVec::unit(1)).get(0), Some(&q(1)));
        let c = SparseVec::unit(0);
        assert_eq!(qs.project(&qs.section(&c)), c);
    }

    #[test]
    fn swap_descends_but_projection_to_first_does_not() {
        let k = Subspace::span_owned(2, [SparseVec::from_pairs([(0, q(1)), (1, q(1))])]);
        let qs = QuotientSpace::new(k);
        let swap = SparseMatrix::from_columns(2, vec![SparseVec::unit(1), SparseVec::unit(0)]);
        let m = QuotientSpace::induced_map(&swap, &qs, &qs).unwrap();
        assert_eq!(m.get(0, 0), q(-1));
        let p = SparseMatrix::from_columns(2, vec![SparseVec::unit(0), SparseVec::new()]);
        assert!(matches!(
            QuotientSpace::induced_map(&p, &qs, &qs),
            Err(Error::WellDefinedness(_))
        ));
    }

    #[test]
    fn restriction() {
        let line = Subspace::span_owned(2, [SparseVec::unit(0)]);
        let scale = SparseMatrix::identity(2).scaled(&q(3));
        assert_eq!(restrict(&scale, &line, &line).unwrap().get(0, 0), q(3));
        let swap = SparseMatrix::from_columns(2, vec![SparseVec::unit(1), SparseVec::unit(0)]);
        assert!(matches!(restrict(&swap, &line, &line), Err(Error::Restriction(_))));
    }
}
