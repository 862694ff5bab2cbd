//! The para-cyclic module `T_n(A,M) = A^{⊗ n+1} ⊗_R M` of a right
//! H-module algebra with right-right stable coefficients.

use super::{ParaCyclicHModule, Presentation};
use crate::algebra::{kron_all, Junction, Radix, TensorChain};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebroid, Side};
use crate::linalg::{Accumulator, QuotientSpace, SparseMatrix, SparseVec};
use crate::modules::{ModuleAlgebra, Orientation, StableModuleComodule};
use crate::scalar::Scalar;

/// `T(A,M)` together with the balanced tensor chains it lives on.
/// Module coordinates in degree `n` are quotient coordinates of `chains[n]`.
#[derive(Clone, Debug)]
pub struct AlgebraNerve {
    pub module: ParaCyclicHModule,
    pub chains: Vec<TensorChain>,
}

struct Data<'a> {
    h: &'a HopfAlgebroid,
    a: &'a ModuleAlgebra,
    m: &'a StableModuleComodule,
    da: usize,
    dm: usize,
    hd: usize,
}

impl Data<'_> {
    fn radix(&self, n: usize) -> Radix {
        let mut dims = vec![self.da; n + 1];
        dims.push(self.dm);
        Radix::new(&dims)
    }

    fn dims(&self, n: usize) -> Vec<usize> {
        self.radix(n).dims().to_vec()
    }

    fn act_a(&self, a: &SparseVec, k: usize) -> SparseVec {
        self.a.module.action[k].apply(a)
    }

    fn act_a_vec(&self, a: &SparseVec, h: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (k, c) in h.iter() {
            acc.add_scaled(c, &self.act_a(a, k));
        }
        acc.finish()
    }

    /// `(m0, h1, coefficient)` terms of a coaction lift.
    fn coaction(&self, rho: &SparseMatrix, m: usize) -> Vec<(usize, usize, Scalar)> {
        rho.col(m)
            .iter()
            .map(|(idx, c)| (idx / self.hd, idx % self.hd, c.clone()))
            .collect()
    }

    fn chain(&self, n: usize) -> TensorChain {
        let r = &self.h.right;
        let rd = r.base().dim();
        let a_right: Vec<SparseMatrix> = (0..rd).map(|b| self.a.module.act(r.source().col(b))).collect();
        let a_left: Vec<SparseMatrix> = (0..rd).map(|b| self.a.module.act(r.target().col(b))).collect();
        let m_left: Vec<SparseMatrix> = (0..rd).map(|b| self.m.module.act(r.target().col(b))).collect();
        let mut junctions = vec![
            Junction {
                right: a_right.clone(),
                left: a_left,
            };
            n
        ];
        junctions.push(Junction {
            right: a_right,
            left: m_left,
        });
        TensorChain::with_junctions(&self.dims(n), &junctions)
    }
}

/// Matrix of a map on plain tensors given on basis digit tuples.
fn ambient(src: &Radix, dst_dim: usize, f: impl Fn(&[usize]) -> SparseVec) -> SparseMatrix {
    let cols = (0..src.total()).map(|idx| f(&src.decode(idx))).collect();
    SparseMatrix::from_columns(dst_dim, cols)
}

fn units(digits: &[usize]) -> Vec<SparseVec> {
    digits.iter().map(|&d| SparseVec::unit(d)).collect()
}

fn pure(vs: &[SparseVec], dims: &[usize]) -> SparseVec {
    let refs: Vec<&SparseVec> = vs.iter().collect();
    kron_all(&refs, dims)
}

/// Builds `T_n(A,M)` for `n ≤ n_max`:
///
/// * `d_i` multiplies `a_i a_{i+1}` for `i < n`, and
///   `d_n = (a_n◁m^[1]) a_0 ⊗ a_1 ⊗ … ⊗ a_{n-1} ⊗ m^[0]`;
/// * `s_i` inserts `1` after `a_i`;
/// * `τ = a_n◁m^[1] ⊗ a_0 ⊗ … ⊗ a_{n-1} ⊗ m^[0]`;
/// * `τ^{-1} = a_1 ⊗ … ⊗ a_n ⊗ a_0◁S^{-1}(m_[1]) ⊗ m_[0]`;
/// * `(a_0 ⊗ … ⊗ a_n ⊗ m)·h = a_0◁h^(2) ⊗ … ⊗ a_n◁h^(n+2) ⊗ m·h^(1)`.
pub fn build_t_module_algebra(
    h: &HopfAlgebroid,
    a: &ModuleAlgebra,
    m: &StableModuleComodule,
    n_max: usize,
) -> Result<AlgebraNerve> {
    if a.side() != Side::Right {
        return Err(Error::InvalidInstance("T(A,M) needs a right module algebra".into()));
    }
    if m.orientation() != Orientation::Right {
        return Err(Error::InvalidInstance("T(A,M) needs right-right coefficients".into()));
    }
    let d = Data {
        h,
        a,
        m,
        da: a.dim(),
        dm: m.dim(),
        hd: h.dim(),
    };
    let chains: Vec<TensorChain> = (0..=n_max).map(|n| d.chain(n)).collect();
    let alg = &a.algebra;
    let ind = |f: SparseMatrix, src: usize, dst: usize| QuotientSpace::induced_map(&f, &chains[src].quotient, &chains[dst].quotient);

    let mut x = ParaCyclicHModule {
        n_max,
        h_dim: d.hd,
        dims: Vec::new(),
        faces: Vec::new(),
        degeneracies: Vec::new(),
        tau: Vec::new(),
        tau_inv: Vec::new(),
        action: Vec::new(),
        pseudo: false,
        para: true,
        presentation: Vec::new(),
    };
    for n in 0..=n_max {
        let src = d.radix(n);
        let dim_here = src.total();
        x.dims.push(chains[n].dim());
        x.presentation.push(Presentation::identity(chains[n].dim()));

        let mut faces = Vec::new();
        if n > 0 {
            let lower = d.dims(n - 1);
            let lower_total = d.radix(n - 1).total();
            for i in 0..n {
                let f = ambient(&src, lower_total, |dg| {
                    let mut vs = units(dg);
                    let prod = alg.basis_product(dg[i], dg[i + 1]).clone();
                    vs.splice(i..i + 2, [prod]);
                    pure(&vs, &lower)
                });
                faces.push(ind(f, n, n - 1)?);
            }
            let f = ambient(&src, lower_total, |dg| {
                let mut acc = Accumulator::new();
                for (m0, h1, c) in d.coaction(&m.comodule.rho_r, dg[n + 1]) {
                    let an = d.act_a(&SparseVec::unit(dg[n]), h1);
                    let first = alg.mul(&an, &SparseVec::unit(dg[0]));
                    let mut vs = vec![first];
                    vs.extend(units(&dg[1..n]));
                    vs.push(SparseVec::unit(m0));
                    acc.add_scaled(&c, &pure(&vs, &lower));
                }
                acc.finish()
            });
            faces.push(ind(f, n, n - 1)?);
        }
        x.faces.push(faces);

        let mut degs = Vec::new();
        if n < n_max {
            let upper = d.dims(n + 1);
            let upper_total = d.radix(n + 1).total();
            for i in 0..=n {
                let f = ambient(&src, upper_total, |dg| {
                    let mut vs = units(dg);
                    vs.insert(i + 1, alg.unit().clone());
                    pure(&vs, &upper)
                });
                degs.push(ind(f, n, n + 1)?);
            }
        }
        x.degeneracies.push(degs);

        let dims = d.dims(n);
        let tau = ambient(&src, dim_here, |dg| {
            let mut acc = Accumulator::new();
            for (m0, h1, c) in d.coaction(&m.comodule.rho_r, dg[n + 1]) {
                let mut vs = vec![d.act_a(&SparseVec::unit(dg[n]), h1)];
                vs.extend(units(&dg[0..n]));
                vs.push(SparseVec::unit(m0));
                acc.add_scaled(&c, &pure(&vs, &dims));
            }
            acc.finish()
        });
        x.tau.push(ind(tau, n, n)?);

        let tau_inv = ambient(&src, dim_here, |dg| {
            let mut acc = Accumulator::new();
            for (m0, h1, c) in d.coaction(&m.comodule.rho_l, dg[n + 1]) {
                let twisted = d.act_a_vec(&SparseVec::unit(dg[0]), &h.s_inv(&SparseVec::unit(h1)));
                let mut vs = units(&dg[1..=n]);
                vs.push(twisted);
                vs.push(SparseVec::unit(m0));
                acc.add_scaled(&c, &pure(&vs, &dims));
            }
            acc.finish()
        });
        x.tau_inv.push(ind(tau_inv, n, n)?);

        let legs = n + 2;
        let leg_radix = Radix::new(&vec![d.hd; legs]);
        let mut action = Vec::with_capacity(d.hd);
        for k in 0..d.hd {
            let expanded = h.right.sweedler_expand(&SparseVec::unit(k), legs);
            let terms: Vec<(Vec<usize>, Scalar)> =
                expanded.iter().map(|(idx, c)| (leg_radix.decode(idx), c.clone())).collect();
            let f = ambient(&src, dim_here, |dg| {
                let mut acc = Accumulator::new();
                for (ks, c) in &terms {
                    let mut vs: Vec<SparseVec> = (0..=n).map(|p| d.act_a(&SparseVec::unit(dg[p]), ks[p + 1])).collect();
                    vs.push(m.module.action[ks[0]].col(dg[n + 1]).clone());
                    acc.add_scaled(c, &pure(&vs, &dims));
                }
                acc.finish()
            });
            action.push(ind(f, n, n)?);
        }
        x.action.push(action);
    }
    Ok(AlgebraNerve {
        module: x,
        chains,
    })
}

/// The cyclic inverse in degree `n`, as built from the `ρ_L` formula.
pub fn tau_inverse(t: &ParaCyclicHModule, n: usize) -> SparseMatrix {
    t.tau_inv[n].clone()
}
