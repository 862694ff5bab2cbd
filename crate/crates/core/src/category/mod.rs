//! Finite H-categories: Hom-spaces with a left H-action compatible with
//! composition, built either from equivariant modules (through the action
//! `h(f)(x) = h_(1) f(S(h_(2)) x)`) or combinatorially (the two-object
//! category LS). Functors, natural isomorphisms and separation witnesses
//! live here too; the nerve and the homotopies are in [`nerve`].

pub mod nerve;

pub use nerve::{
    build_ccls, build_q_category, build_t_category, induced_chain_map, oneobj_iso, separation_retraction,
    special_homotopy_from_nat_iso, CategoryNerve, Homotopy, NerveLayout, Retraction,
};

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebroid;
use crate::linalg::{joint_kernel, Accumulator, SparseMatrix, SparseVec, Subspace};
use crate::modules::{EquivariantModule, ModuleAlgebra};
use crate::report::Report;

/// One Hom-space with its left H-action, one matrix per H basis element.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub dim: usize,
    pub action: Vec<SparseMatrix>,
}

/// Hom-spaces realized inside `Hom_k(X, Y)`: `spaces[x][y]` is a subspace
/// of vectorized matrices, index `row * dim X + col`.
#[derive(Clone, Debug)]
pub struct Realization {
    pub modules: Vec<EquivariantModule>,
    pub spaces: Vec<Vec<Subspace>>,
}

/// A small k-linear category with finitely many objects. `homs[x][y]` is
/// `Hom(x, y)`; `compose[x][y][z][g * dim Hom(x,y) + f]` is `g ∘ f` for
/// `f: x -> y`, `g: y -> z`.
#[derive(Clone, Debug)]
pub struct HCategory {
    pub objects: Vec<String>,
    pub homs: Vec<Vec<HomSpace>>,
    pub compose: Vec<Vec<Vec<Vec<SparseVec>>>>,
    pub identity: Vec<SparseVec>,
    pub realization: Option<Realization>,
}

impl HCategory {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.homs[x][y].dim
    }

    /// `g ∘ f` for `f: x -> y`, `g: y -> z`.
    pub fn compose_vec(&self, x: usize, y: usize, z: usize, g: &SparseVec, f: &SparseVec) -> SparseVec {
        let table = &self.compose[x][y][z];
        let df = self.hom_dim(x, y);
        let mut acc = Accumulator::new();
        for (gi, a) in g.iter() {
            for (fi, b) in f.iter() {
                acc.add_scaled(&(a * b), &table[gi * df + fi]);
            }
        }
        acc.finish()
    }

    /// The H-action of an arbitrary element on `Hom(x, y)`.
    pub fn act(&self, x: usize, y: usize, h: &SparseVec) -> SparseMatrix {
        let d = self.hom_dim(x, y);
        let mut out = SparseMatrix::zero(d, d);
        for (k, a) in h.iter() {
            out = out.add_scaled(a, &self.homs[x][y].action[k]);
        }
        out
    }

    /// Coordinates of a k-linear map `X -> Y` inside `Hom(x, y)`, for
    /// realized categories.
    pub fn coordinates_of(&self, x: usize, y: usize, m: &SparseMatrix) -> Option<SparseVec> {
        let r = self.realization.as_ref()?;
        r.spaces[x][y].coordinates(&mat_to_vec(m))
    }

    /// The k-linear map represented by `f ∈ Hom(x, y)`, for realized categories.
    pub fn realize(&self, x: usize, y: usize, f: &SparseVec) -> Option<SparseMatrix> {
        let r = self.realization.as_ref()?;
        let (dx, dy) = (r.modules[x].dim, r.modules[y].dim);
        Some(vec_to_mat(&r.spaces[x][y].combine(f), dy, dx))
    }
}

/// Vectorization `row * ncols + col`.
pub fn mat_to_vec(m: &SparseMatrix) -> SparseVec {
    let nc = m.ncols();
    SparseVec::from_pairs(
        m.columns()
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, a)| (r * nc + c, a.clone())).collect::<Vec<_>>()),
    )
}

pub fn vec_to_mat(v: &SparseVec, nrows: usize, ncols: usize) -> SparseMatrix {
    let mut cols = vec![Vec::new(); ncols];
    for (idx, a) in v.iter() {
        cols[idx % ncols].push((idx / ncols, a.clone()));
    }
    SparseMatrix::from_columns(nrows, cols.into_iter().map(SparseVec::from_pairs).collect())
}

fn unit_matrix(nrows: usize, ncols: usize, r: usize, c: usize) -> SparseMatrix {
    let mut cols = vec![SparseVec::new(); ncols];
    cols[c] = SparseVec::unit(r);
    SparseMatrix::from_columns(nrows, cols)
}

/// `hom_A(X, Y)` as a subspace of vectorized maps, and the H-action
/// `h(f) = h_(1) f S(h_(2))` on it. Fails with `Closure` if some `h(f)`
/// is not A-linear.
pub fn build_hom_action(h: &HopfAlgebroid, x: &EquivariantModule, y: &EquivariantModule) -> Result<(Subspace, Vec<SparseMatrix>)> {
    let (dx, dy) = (x.dim, y.dim);
    let n = dx * dy;
    let linearity: Vec<SparseMatrix> = (0..x.right_a.len())
        .map(|a| {
            let cols = (0..n)
                .map(|idx| {
                    let e = unit_matrix(dy, dx, idx / dx, idx % dx);
                    mat_to_vec(&e.compose(&x.right_a[a]).sub(&y.right_a[a].compose(&e)))
                })
                .collect();
            SparseMatrix::from_columns(n, cols)
        })
        .collect();
    let space = joint_kernel(n, &linearity);
    let hd = h.dim();
    let s_x: Vec<SparseMatrix> = (0..hd).map(|k| x.act_h(h.antipode.col(k))).collect();
    let mut action = Vec::with_capacity(hd);
    for k in 0..hd {
        let delta = h.left.delta(&SparseVec::unit(k));
        let mut cols = Vec::with_capacity(space.dim());
        for (b, f) in space.basis().iter().enumerate() {
            let fm = vec_to_mat(f, dy, dx);
            let mut acc = SparseMatrix::zero(dy, dx);
            for (idx, c) in delta.iter() {
                let (p, q) = (idx / hd, idx % hd);
                acc = acc.add_scaled(c, &y.left_h[p].compose(&fm).compose(&s_x[q]));
            }
            match space.coordinates(&mat_to_vec(&acc)) {
                Some(v) => cols.push(v),
                None => {
                    return Err(Error::Closure(format!(
                        "H basis element {k} moves Hom basis element {b} out of the A-linear maps"
                    )))
                }
            }
        }
        action.push(SparseMatrix::from_columns(space.dim(), cols));
    }
    Ok((space, action))
}

/// The full H-category on the given equivariant modules.
pub fn build_module_category(h: &HopfAlgebroid, objects: Vec<(String, EquivariantModule)>) -> Result<HCategory> {
    let k = objects.len();
    let mods: Vec<EquivariantModule> = objects.iter().map(|(_, m)| m.clone()).collect();
    let mut spaces = vec![Vec::with_capacity(k); k];
    let mut homs = vec![Vec::with_capacity(k); k];
    for x in 0..k {
        for y in 0..k {
            let (s, action) = build_hom_action(h, &mods[x], &mods[y])?;
            homs[x].push(HomSpace { dim: s.dim(), action });
            spaces[x].push(s);
        }
    }
    let mut compose = vec![vec![vec![Vec::new(); k]; k]; k];
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let mut table = Vec::with_capacity(spaces[y][z].dim() * spaces[x][y].dim());
                for g in spaces[y][z].basis() {
                    let gm = vec_to_mat(g, mods[z].dim, mods[y].dim);
                    for f in spaces[x][y].basis() {
                        let fm = vec_to_mat(f, mods[y].dim, mods[x].dim);
                        let c = spaces[x][z]
                            .coordinates(&mat_to_vec(&gm.compose(&fm)))
                            .ok_or_else(|| Error::InvalidInstance("composite of A-linear maps is not A-linear".into()))?;
                        table.push(c);
                    }
                }
                compose[x][y][z] = table;
            }
        }
    }
    let identity = (0..k)
        .map(|x| {
            spaces[x][x]
                .coordinates(&mat_to_vec(&SparseMatrix::identity(mods[x].dim)))
                .ok_or_else(|| Error::InvalidInstance("identity is not A-linear".into()))
        })
        .collect::<Result<_>>()?;
    Ok(HCategory {
        objects: objects.into_iter().map(|(n, _)| n).collect(),
        homs,
        compose,
        identity,
        realization: Some(Realization { modules: mods, spaces }),
    })
}

/// `*^A`: the single object A.
pub fn build_star(h: &HopfAlgebroid, a: &ModuleAlgebra) -> Result<HCategory> {
    build_free_cat(h, a, 1)
}

/// `F^A_{≤ r}`: the free modules `A, A², …, A^r`.
pub fn build_free_cat(h: &HopfAlgebroid, a: &ModuleAlgebra, r: usize) -> Result<HCategory> {
    let objs = (1..=r)
        .map(|k| {
            let name = if k == 1 { "A".to_string() } else { format!("A^{k}") };
            (name, EquivariantModule::free(a, k))
        })
        .collect();
    build_module_category(h, objs)
}

/// The linearization over L = ℚ of the groupoid with two objects and one
/// morphism between any two of them, with H acting through `s_L ε_L`.
pub fn build_ls(h: &HopfAlgebroid) -> Result<HCategory> {
    if h.left.base().dim() != 1 {
        return Err(Error::Unsupported("LS is built over a one-dimensional base only".into()));
    }
    let eps: Vec<SparseMatrix> = (0..h.dim())
        .map(|k| SparseMatrix::identity(1).scaled(&h.left.counit().get(0, k)))
        .collect();
    let hom = HomSpace { dim: 1, action: eps };
    Ok(HCategory {
        objects: vec!["0".into(), "1".into()],
        homs: vec![vec![hom.clone(); 2]; 2],
        compose: vec![vec![vec![vec![SparseVec::unit(0)]; 2]; 2]; 2],
        identity: vec![SparseVec::unit(0); 2],
        realization: None,
    })
}

/// Full subcategory on `objects`, with its inclusion functor.
pub fn full_subcategory(c: &HCategory, objects: &[usize]) -> (HCategory, HFunctor) {
    fn select<T: Clone>(objects: &[usize], v: &[T]) -> Vec<T> {
        objects.iter().map(|&o| v[o].clone()).collect()
    }
    let homs: Vec<Vec<HomSpace>> = objects.iter().map(|&x| select(objects, &c.homs[x])).collect();
    let compose = objects
        .iter()
        .map(|&x| objects.iter().map(|&y| select(objects, &c.compose[x][y])).collect())
        .collect();
    let realization = c.realization.as_ref().map(|r| Realization {
        modules: select(objects, &r.modules),
        spaces: objects.iter().map(|&x| select(objects, &r.spaces[x])).collect(),
    });
    let sub = HCategory {
        objects: select(objects, &c.objects),
        identity: select(objects, &c.identity),
        homs,
        compose,
        realization,
    };
    let maps = objects
        .iter()
        .map(|&x| objects.iter().map(|&y| SparseMatrix::identity(c.hom_dim(x, y))).collect())
        .collect();
    (
        sub,
        HFunctor {
            object_map: objects.to_vec(),
            maps,
        },
    )
}

/// A functor given by its object map and one matrix per Hom-space.
#[derive(Clone, Debug)]
pub struct HFunctor {
    pub object_map: Vec<usize>,
    pub maps: Vec<Vec<SparseMatrix>>,
}

impl HFunctor {
    pub fn identity(c: &HCategory) -> Self {
        HFunctor {
            object_map: (0..c.len()).collect(),
            maps: (0..c.len())
                .map(|x| (0..c.len()).map(|y| SparseMatrix::identity(c.hom_dim(x, y))).collect())
                .collect(),
        }
    }

    /// `f ↦ P_y f P_x^{-1}` on a realized category, for automorphisms `P`
    /// of the underlying modules.
    pub fn conjugation(c: &HCategory, p: &[SparseMatrix], p_inv: &[SparseMatrix]) -> Result<Self> {
        let k = c.len();
        let mut maps = vec![Vec::with_capacity(k); k];
        for x in 0..k {
            for y in 0..k {
                let cols = (0..c.hom_dim(x, y))
                    .map(|b| {
                        let f = c.realize(x, y, &SparseVec::unit(b)).ok_or_else(|| {
                            Error::Unsupported("conjugation needs a realized category".into())
                        })?;
                        c.coordinates_of(x, y, &p[y].compose(&f).compose(&p_inv[x]))
                            .ok_or_else(|| Error::InvalidInstance("conjugate is not A-linear".into()))
                    })
                    .collect::<Result<_>>()?;
                maps[x].push(SparseMatrix::from_columns(c.hom_dim(x, y), cols));
            }
        }
        Ok(HFunctor {
            object_map: (0..k).collect(),
            maps,
        })
    }

    pub fn apply(&self, x: usize, y: usize, f: &SparseVec) -> SparseVec {
        self.maps[x][y].apply(f)
    }

    /// `G ∘ F`.
    pub fn then(&self, g: &HFunctor) -> HFunctor {
        let k = self.object_map.len();
        HFunctor {
            object_map: self.object_map.iter().map(|&o| g.object_map[o]).collect(),
            maps: (0..k)
                .map(|x| {
                    (0..k)
                        .map(|y| g.maps[self.object_map[x]][self.object_map[y]].compose(&self.maps[x][y]))
                        .collect()
                })
                .collect(),
        }
    }
}

/// Components `η_x ∈ Hom(F x, G x)` with inverses `η_x^{-1} ∈ Hom(G x, F x)`.
#[derive(Clone, Debug)]
pub struct NaturalIso {
    pub components: Vec<SparseVec>,
    pub inverses: Vec<SparseVec>,
}

/// For each object x of the category, the pieces `(x_i, u_i, v_i)` with
/// `x_i` an object of the subcategory (as an object of the category),
/// `u_i : x -> x_i`, `v_i : x_i -> x`, and `Σ v_i u_i = id_x`.
#[derive(Clone, Debug)]
pub struct SeparationWitness {
    pub pieces: Vec<Vec<(usize, SparseVec, SparseVec)>>,
}

fn check_invariant(r: &mut Report, name: &str, h: &HopfAlgebroid, c: &HCategory, x: usize, y: usize, f: &SparseVec, tag: &[usize]) {
    let ax = r.axiom(name);
    for k in 0..h.dim() {
        let hk = SparseVec::unit(k);
        let lhs = c.homs[x][y].action[k].apply(f);
        let s = c.act(x, y, &h.left.source().apply(&h.left.counit().apply(&hk))).apply(f);
        let t = c.act(x, y, &h.left.target().apply(&h.left.counit().apply(&hk))).apply(f);
        let mut b = tag.to_vec();
        b.push(k);
        ax.compare(&b, &lhs, &s);
        ax.compare(&b, &lhs, &t);
    }
}

/// Whether `f ∈ Hom(x, y)` is H-invariant: `h(f) = s_L ε_L(h) f = t_L ε_L(h) f`.
pub fn is_invariant(h: &HopfAlgebroid, c: &HCategory, x: usize, y: usize, f: &SparseVec) -> bool {
    let mut r = Report::new("");
    check_invariant(&mut r, "", h, c, x, y, f, &[]);
    r.passed()
}

pub fn check_hcategory(h: &HopfAlgebroid, c: &HCategory) -> Report {
    let mut r = Report::new("H-category");
    let k = c.len();
    let hd = h.dim();
    let ax = r.axiom("associativity of composition");
    for w in 0..k {
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    for f in 0..c.hom_dim(w, x) {
                        for g in 0..c.hom_dim(x, y) {
                            for e in 0..c.hom_dim(y, z) {
                                let (f, g, e) = (SparseVec::unit(f), SparseVec::unit(g), SparseVec::unit(e));
                                let lhs = c.compose_vec(w, y, z, &e, &c.compose_vec(w, x, y, &g, &f));
                                let rhs = c.compose_vec(w, x, z, &c.compose_vec(x, y, z, &e, &g), &f);
                                ax.compare(&[w, x, y, z], &lhs, &rhs);
                            }
                        }
                    }
                }
            }
        }
    }
    let ax = r.axiom("identities are units");
    for x in 0..k {
        for y in 0..k {
            for f in 0..c.hom_dim(x, y) {
                let f = SparseVec::unit(f);
                ax.compare(&[x, y, 0], &c.compose_vec(x, y, y, &c.identity[y], &f), &f);
                ax.compare(&[x, y, 1], &c.compose_vec(x, x, y, &f, &c.identity[x]), &f);
            }
        }
    }
    let ax = r.axiom("Hom-spaces are H-modules");
    for x in 0..k {
        for y in 0..k {
            let hom = &c.homs[x][y];
            let one = c.act(x, y, h.total().unit());
            ax.expect(&[x, y], one.is_identity(), || ("1·f".into(), "f".into()));
            for p in 0..hd {
                for q in 0..hd {
                    let prod = h.total().basis_product(p, q);
                    let lhs = c.act(x, y, prod);
                    let rhs = hom.action[p].compose(&hom.action[q]);
                    ax.expect(&[x, y, p, q], lhs == rhs, || ("(pq)·f".into(), "p·(q·f)".into()));
                }
            }
        }
    }
    let ax = r.axiom("h(fg) = (h_(1)f)(h_(2)g)");
    for kk in 0..hd {
        let delta = h.left.delta(&SparseVec::unit(kk));
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    for gi in 0..c.hom_dim(y, z) {
                        for fi in 0..c.hom_dim(x, y) {
                            let (g, f) = (SparseVec::unit(gi), SparseVec::unit(fi));
                            let lhs = c.homs[x][z].action[kk].apply(&c.compose_vec(x, y, z, &g, &f));
                            let mut acc = Accumulator::new();
                            for (idx, a) in delta.iter() {
                                let (p, q) = (idx / hd, idx % hd);
                                let hg = c.homs[y][z].action[p].apply(&g);
                                let hf = c.homs[x][y].action[q].apply(&f);
                                acc.add_scaled(a, &c.compose_vec(x, y, z, &hg, &hf));
                            }
                            ax.compare(&[kk, x, y, z, gi, fi], &lhs, &acc.finish());
                        }
                    }
                }
            }
        }
    }
    for x in 0..k {
        check_invariant(&mut r, "h(id) = s_L ε_L(h) id = t_L ε_L(h) id", h, c, x, x, &c.identity[x], &[x]);
    }
    merge_same_names(r)
}

fn merge_same_names(r: Report) -> Report {
    let mut out = Report::new(r.subject);
    for a in r.axioms {
        match out.axioms.iter_mut().find(|b| b.name == a.name) {
            Some(b) => {
                b.cases += a.cases;
                b.failures += a.failures;
                for w in a.witnesses {
                    if b.witnesses.len() < crate::report::MAX_WITNESSES {
                        b.witnesses.push(w);
                    }
                }
            }
            None => out.axioms.push(a),
        }
    }
    out
}

/// Identities, composition and equivariance of a functor `c -> d`.
pub fn check_functor(h: &HopfAlgebroid, c: &HCategory, d: &HCategory, f: &HFunctor) -> Report {
    let mut r = Report::new("H-functor");
    let k = c.len();
    let o = &f.object_map;
    let ax = r.axiom("F(id) = id");
    for x in 0..k {
        ax.compare(&[x], &f.apply(x, x, &c.identity[x]), &d.identity[o[x]]);
    }
    let ax = r.axiom("F(gf) = F(g)F(f)");
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                for gi in 0..c.hom_dim(y, z) {
                    for fi in 0..c.hom_dim(x, y) {
                        let (g, fv) = (SparseVec::unit(gi), SparseVec::unit(fi));
                        let lhs = f.apply(x, z, &c.compose_vec(x, y, z, &g, &fv));
                        let rhs = d.compose_vec(o[x], o[y], o[z], &f.apply(y, z, &g), &f.apply(x, y, &fv));
                        ax.compare(&[x, y, z, gi, fi], &lhs, &rhs);
                    }
                }
            }
        }
    }
    let ax = r.axiom("F(h f) = h F(f)");
    for x in 0..k {
        for y in 0..k {
            for kk in 0..h.dim() {
                let lhs = f.maps[x][y].compose(&c.homs[x][y].action[kk]);
                let rhs = d.homs[o[x]][o[y]].action[kk].compose(&f.maps[x][y]);
                ax.expect(&[x, y, kk], lhs == rhs, || ("F(h f)".into(), "h F(f)".into()));
            }
        }
    }
    r
}

/// Naturality `G(f) η_x = η_y F(f)`, invertibility and H-invariance of a
/// natural isomorphism `F ⇒ G` between functors `c -> d`.
pub fn check_nat_iso(h: &HopfAlgebroid, c: &HCategory, d: &HCategory, f: &HFunctor, g: &HFunctor, eta: &NaturalIso) -> Report {
    let mut r = Report::new("natural isomorphism");
    let k = c.len();
    let (fo, go) = (&f.object_map, &g.object_map);
    let ax = r.axiom("G(f) η_x = η_y F(f)");
    for x in 0..k {
        for y in 0..k {
            for b in 0..c.hom_dim(x, y) {
                let m = SparseVec::unit(b);
                let lhs = d.compose_vec(fo[x], go[x], go[y], &g.apply(x, y, &m), &eta.components[x]);
                let rhs = d.compose_vec(fo[x], fo[y], go[y], &eta.components[y], &f.apply(x, y, &m));
                ax.compare(&[x, y, b], &lhs, &rhs);
            }
        }
    }
    let ax = r.axiom("η_x η_x^-1 = id, η_x^-1 η_x = id");
    for x in 0..k {
        let (a, b) = (fo[x], go[x]);
        ax.compare(&[x, 0], &d.compose_vec(b, a, b, &eta.components[x], &eta.inverses[x]), &d.identity[b]);
        ax.compare(&[x, 1], &d.compose_vec(a, b, a, &eta.inverses[x], &eta.components[x]), &d.identity[a]);
    }
    for x in 0..k {
        check_invariant(&mut r, "η is H-invariant", h, d, fo[x], go[x], &eta.components[x], &[x, 0]);
        check_invariant(&mut r, "η is H-invariant", h, d, go[x], fo[x], &eta.inverses[x], &[x, 1]);
    }
    merge_same_names(r)
}

/// `Σ v_i u_i = id_x` for every object, and H-invariance of every piece.
pub fn check_separated(h: &HopfAlgebroid, c: &HCategory, xi: &[usize], w: &SeparationWitness) -> Report {
    let mut r = Report::new("separation");
    let ax = r.axiom("pieces lie in the subcategory");
    for (x, ps) in w.pieces.iter().enumerate() {
        for (i, (o, _, _)) in ps.iter().enumerate() {
            ax.expect(&[x, i], xi.contains(o), || (format!("object {o}"), format!("{xi:?}")));
        }
    }
    if !r.passed() || w.pieces.len() != c.len() {
        r.note("one family per object", w.pieces.len() == c.len(), format!("{} families", w.pieces.len()));
        return r;
    }
    let ax = r.axiom("Σ v_i u_i = id");
    for (x, ps) in w.pieces.iter().enumerate() {
        let mut acc = Accumulator::new();
        for (o, u, v) in ps {
            acc.add_vec(&c.compose_vec(x, *o, x, v, u));
        }
        ax.compare(&[x], &acc.finish(), &c.identity[x]);
    }
    for (x, ps) in w.pieces.iter().enumerate() {
        for (i, (o, u, v)) in ps.iter().enumerate() {
            check_invariant(&mut r, "u_i, v_i are H-invariant", h, c, x, *o, u, &[x, i, 0]);
            check_invariant(&mut r, "u_i, v_i are H-invariant", h, c, *o, x, v, &[x, i, 1]);
        }
    }
    merge_same_names(r)
}

/// Coordinate projections and inclusions `A^k ⇄ A` on `F^A_{≤ r}`
/// (object `k - 1` is `A^k`), over the subcategory on object 0.
pub fn free_witness(c: &HCategory) -> Result<SeparationWitness> {
    let r = c
        .realization
        .as_ref()
        .ok_or_else(|| Error::Unsupported("free witness needs a realized category".into()))?;
    let da = r.modules[0].dim;
    let mut pieces = Vec::with_capacity(c.len());
    for x in 0..c.len() {
        let dx = r.modules[x].dim;
        let k = dx / da;
        let mut ps = Vec::with_capacity(k);
        for j in 0..k {
            let pi = SparseMatrix::from_columns(
                da,
                (0..dx)
                    .map(|i| if i / da == j { SparseVec::unit(i % da) } else { SparseVec::new() })
                    .collect(),
            );
            let inc = pi.transpose();
            let u = c
                .coordinates_of(x, 0, &pi)
                .ok_or_else(|| Error::InvalidInstance("projection is not A-linear".into()))?;
            let v = c
                .coordinates_of(0, x, &inc)
                .ok_or_else(|| Error::InvalidInstance("inclusion is not A-linear".into()))?;
            ps.push((0, u, v));
        }
        pieces.push(ps);
    }
    Ok(SeparationWitness { pieces })
}

/// The block swap on `A^k` (reversing the order of the summands), as an
/// automorphism of each object of `F^A_{≤ r}`, together with the
/// corresponding relabeling functor and the natural isomorphism from the
/// identity functor to it.
pub fn relabeling(c: &HCategory) -> Result<(HFunctor, NaturalIso)> {
    let r = c
        .realization
        .as_ref()
        .ok_or_else(|| Error::Unsupported("relabeling needs a realized category".into()))?;
    let da = r.modules[0].dim;
    let p: Vec<SparseMatrix> = r
        .modules
        .iter()
        .map(|m| {
            let k = m.dim / da;
            SparseMatrix::from_columns(
                m.dim,
                (0..m.dim).map(|i| SparseVec::unit((k - 1 - i / da) * da + i % da)).collect(),
            )
        })
        .collect();
    // the block reversal is an involution
    let g = HFunctor::conjugation(c, &p, &p)?;
    let comps = (0..c.len())
        .map(|x| c.coordinates_of(x, x, &p[x]).ok_or_else(|| Error::InvalidInstance("relabeling is not A-linear".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok((
        g,
        NaturalIso {
            components: comps.clone(),
            inverses: comps,
        },
    ))
}

#[cfg(test)]
mod tests;
