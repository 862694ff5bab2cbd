//! Hochschild and cyclic cohomology of the dual of a cyclic module, and a
//! straight-line classical cyclic module of an algebra to compare against.

use std::fmt;

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::cyclic::{CyclicHModule, ParaCyclicHModule, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{kernel_sparse, restrict, QuotientSpace, SparseMatrix, SparseVec, Subspace};
use crate::scalar::Scalar;

/// Cochain spaces `C^n` for `n ≤ n_max` and `b_n : C^n -> C^{n+1}` for
/// `n < n_max`. A subcomplex remembers its embedding into the full duals.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub dims: Vec<usize>,
    pub differentials: Vec<SparseMatrix>,
    pub embedding: Option<Vec<Subspace>>,
}

impl CochainComplex {
    pub fn n_max(&self) -> usize {
        self.dims.len() - 1
    }

    fn check_b2(&self) -> Result<()> {
        for n in 1..self.differentials.len() {
            if !self.differentials[n].compose(&self.differentials[n - 1]).is_zero() {
                return Err(Error::B2 { degree: n - 1 });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub dim: usize,
    pub ker: usize,
    pub im: usize,
    pub betti: usize,
    /// False in the top degree, where `ker b` is not known.
    pub reliable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub rows: Vec<DegreeRow>,
}

impl CohomologyReport {
    pub fn betti(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.betti).collect()
    }

    /// Betti numbers of the reliable degrees only.
    pub fn reliable_betti(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.reliable).map(|r| r.betti).collect()
    }
}

impl fmt::Display for CohomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>6} {:>8} {:>8} {:>8} {:>6}  reliable", "degree", "dim", "ker", "im", "betti")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>6} {:>8} {:>8} {:>8} {:>6}  {}",
                r.degree,
                r.dim,
                r.ker,
                r.im,
                r.betti,
                if r.reliable { "yes" } else { "no (bound)" }
            )?;
        }
        Ok(())
    }
}

/// `b = Σ_{i=0}^{n+1} (-1)^i d_i^T` on the full duals.
fn full_differentials(x: &ParaCyclicHModule) -> Vec<SparseMatrix> {
    (0..x.n_max)
        .map(|n| {
            let mut b = SparseMatrix::zero(x.dims[n + 1], x.dims[n]);
            for (i, d) in x.faces[n + 1].iter().enumerate() {
                b = b.add_scaled(&Scalar::sign(i), &d.transpose());
            }
            b
        })
        .collect()
}

/// The full dual complex (Hochschild) and its subcomplex of cochains with
/// `φ τ = (-1)^n φ` (cyclic).
pub fn dualize(x: &CyclicHModule) -> Result<(CochainComplex, CochainComplex)> {
    for n in 0..=x.n_max {
        if !x.tau[n].pow(n + 1).is_identity() {
            return Err(Error::Cyclicity { degree: n });
        }
    }
    let b = full_differentials(x);
    let full = CochainComplex {
        dims: x.dims.clone(),
        differentials: b.clone(),
        embedding: None,
    };
    full.check_b2()?;
    let lambda: Vec<Subspace> = (0..=x.n_max)
        .map(|n| {
            let shifted = x.tau[n]
                .transpose()
                .sub(&SparseMatrix::identity(x.dims[n]).scaled(&Scalar::sign(n)));
            kernel_sparse(&shifted)
        })
        .collect();
    let differentials = (0..x.n_max)
        .map(|n| restrict(&b[n], &lambda[n], &lambda[n + 1]))
        .collect::<Result<Vec<_>>>()?;
    let cyc = CochainComplex {
        dims: lambda.iter().map(Subspace::dim).collect(),
        differentials,
        embedding: Some(lambda),
    };
    cyc.check_b2()?;
    Ok((full, cyc))
}

/// Cocycles, coboundaries and a basis of cohomology in one degree, in the
/// coordinates of `C^n`.
struct DegreeData {
    boundaries: QuotientSpace,
    classes: Subspace,
    ker: usize,
    im: usize,
}

impl DegreeData {
    fn new(c: &CochainComplex, n: usize) -> Self {
        let dim = c.dims[n];
        let cocycles = if n < c.differentials.len() {
            kernel_sparse(&c.differentials[n])
        } else {
            Subspace::full(dim)
        };
        let coboundaries = if n > 0 {
            Subspace::span(dim, c.differentials[n - 1].columns())
        } else {
            Subspace::zero(dim)
        };
        let boundaries = QuotientSpace::new(coboundaries.clone());
        let classes = Subspace::span_owned(boundaries.dim(), cocycles.basis().iter().map(|z| boundaries.project(z)));
        DegreeData {
            boundaries,
            classes,
            ker: cocycles.dim(),
            im: coboundaries.dim(),
        }
    }

    fn representative(&self, k: usize) -> SparseVec {
        self.boundaries.section(&self.classes.basis()[k])
    }

    fn class_of(&self, z: &SparseVec) -> Option<SparseVec> {
        self.classes.coordinates(&self.boundaries.project(z))
    }
}

pub fn cohomology(c: &CochainComplex) -> Result<CohomologyReport> {
    c.check_b2()?;
    let rows = (0..=c.n_max())
        .map(|n| {
            let d = DegreeData::new(c, n);
            DegreeRow {
                degree: n,
                dim: c.dims[n],
                ker: d.ker,
                im: d.im,
                betti: d.classes.dim(),
                reliable: n < c.n_max(),
            }
        })
        .collect();
    Ok(CohomologyReport { rows })
}

/// The cyclic module `A^{⊗ n+1}` with
/// `d_i(a_0 ⊗ … ⊗ a_n) = a_0 ⊗ … ⊗ a_i a_{i+1} ⊗ … ⊗ a_n` (`i < n`),
/// `d_n(a_0 ⊗ … ⊗ a_n) = a_n a_0 ⊗ a_1 ⊗ … ⊗ a_{n-1}`,
/// `s_i` inserting `1` after `a_i`, and `τ(a_0 ⊗ … ⊗ a_n) = a_n ⊗ a_0 ⊗ … ⊗ a_{n-1}`.
pub fn classical_cyclic_oracle(a: &FiniteAlgebra, n_max: usize) -> CyclicHModule {
    let d = a.dim();
    let pow = |k: u32| d.pow(k);
    // digit i of a basis index of A^{⊗ k}, most significant first
    let digit = |idx: usize, k: u32, i: u32| (idx / pow(k - 1 - i)) % d;
    let mut x = ParaCyclicHModule {
        n_max,
        h_dim: 0,
        dims: Vec::new(),
        faces: Vec::new(),
        degeneracies: Vec::new(),
        tau: Vec::new(),
        tau_inv: Vec::new(),
        action: Vec::new(),
        pseudo: false,
        para: false,
        presentation: Vec::new(),
    };
    for n in 0..=n_max {
        let k = n as u32 + 1;
        let dim = pow(k);
        x.dims.push(dim);
        x.presentation.push(Presentation::identity(dim));
        x.action.push(Vec::new());

        let mut faces = Vec::new();
        for i in 0..n as u32 {
            let cols = (0..dim)
                .map(|idx| {
                    let high = idx / pow(k - i);
                    let low = idx % pow(k - i - 2);
                    let prod = a.basis_product(digit(idx, k, i), digit(idx, k, i + 1));
                    prod.reindex(|p| (high * d + p) * pow(k - i - 2) + low)
                })
                .collect();
            faces.push(SparseMatrix::from_columns(pow(k - 1), cols));
        }
        if n > 0 {
            let cols = (0..dim)
                .map(|idx| {
                    let middle = (idx / d) % pow(k - 2);
                    let prod = a.basis_product(idx % d, idx / pow(k - 1));
                    prod.reindex(|p| p * pow(k - 2) + middle)
                })
                .collect();
            faces.push(SparseMatrix::from_columns(pow(k - 1), cols));
        }
        x.faces.push(faces);

        let mut degs = Vec::new();
        if n < n_max {
            for i in 0..=n as u32 {
                let cols = (0..dim)
                    .map(|idx| {
                        let high = idx / pow(k - 1 - i);
                        let low = idx % pow(k - 1 - i);
                        a.unit().reindex(|u| (high * d + u) * pow(k - 1 - i) + low)
                    })
                    .collect();
                degs.push(SparseMatrix::from_columns(pow(k + 1), cols));
            }
        }
        x.degeneracies.push(degs);

        let rotate = |idx: usize| (idx % d) * pow(k - 1) + idx / d;
        let tau = SparseMatrix::from_columns(dim, (0..dim).map(|idx| SparseVec::unit(rotate(idx))).collect());
        x.tau_inv.push(tau.transpose());
        x.tau.push(tau);
    }
    x
}

/// The map `H(dst) -> H(src)` induced by a graded map `f : X -> Y`
/// between cyclic modules, where `src` and `dst` are the matching
/// complexes of `X` and `Y` (both full or both cyclic). Columns are
/// indexed by the cohomology basis of `dst`, rows by that of `src`.
pub fn induced_cohomology_map(f: &[SparseMatrix], src: &CochainComplex, dst: &CochainComplex) -> Result<Vec<SparseMatrix>> {
    let top = src.n_max().min(dst.n_max()).min(f.len().saturating_sub(1));
    let mut out = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let pullback = f[n].transpose();
        let s = DegreeData::new(src, n);
        let t = DegreeData::new(dst, n);
        let mut cols = Vec::with_capacity(t.classes.dim());
        for k in 0..t.classes.dim() {
            let rep = t.representative(k);
            let ambient = match &dst.embedding {
                Some(e) => e[n].combine(&rep),
                None => rep,
            };
            let pulled = pullback.apply(&ambient);
            let local = match &src.embedding {
                Some(e) => e[n].coordinates(&pulled).ok_or_else(|| {
                    Error::Commutation(format!("pullback of class {k} in degree {n} is not cyclic"))
                })?,
                None => pulled,
            };
            if n < src.differentials.len() && !src.differentials[n].apply(&local).is_zero() {
                return Err(Error::Commutation(format!(
                    "pullback of class {k} in degree {n} is not a cocycle"
                )));
            }
            let class = s.class_of(&local).ok_or_else(|| {
                Error::Commutation(format!("pullback of class {k} in degree {n} has no class"))
            })?;
            cols.push(class);
        }
        out.push(SparseMatrix::from_columns(s.classes.dim(), cols));
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
