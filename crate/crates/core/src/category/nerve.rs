//! The nerve `T(C,M)` of an H-category with left-left coefficients, its
//! cyclic quotient `Q(C,M)`, the cyclic module `CC(LS)`, induced chain
//! maps, special homotopies and the one-object comparison with `Q(A,M)`.
//!
//! `T_n(C,M)` is the direct sum over object tuples `(X_0, …, X_n)` of
//! `Hom(X_1,X_0) ⊗ Hom(X_2,X_1) ⊗ … ⊗ Hom(X_0,X_n) ⊗ M`, one block per
//! tuple with tuples in lexicographic order.

use super::{build_ls, check_nat_iso, check_separated, full_subcategory, HCategory, HFunctor, NaturalIso, SeparationWitness};
use crate::algebra::{kron_all, Radix};
use crate::cyclic::{
    build_q_equalizer, build_qh, check_semicyclic_map, compare_matrices, compose_graded, identity_map, tensor_product,
    AlgebraNerve, CyclicHModule, GradedMap, ParaCyclicHModule, PowerPolicy, Presentation,
};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebroid, Side};
use crate::linalg::{Accumulator, SparseMatrix, SparseVec};
use crate::modules::{Orientation, StableModuleComodule};
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Block {
    pub objects: Vec<usize>,
    pub radix: Radix,
    pub offset: usize,
}

/// Block structure of `T_n(C,M)`.
#[derive(Clone, Debug)]
pub struct NerveLayout {
    pub n: usize,
    pub blocks: Vec<Block>,
    lookup: Vec<Option<usize>>,
    nobj: usize,
    pub total: usize,
}

impl NerveLayout {
    pub fn new(c: &HCategory, md: usize, n: usize) -> Self {
        let nobj = c.len();
        let tuples = Radix::new(&vec![nobj; n + 1]);
        let mut blocks = Vec::new();
        let mut lookup = vec![None; tuples.total()];
        let mut offset = 0;
        for code in 0..tuples.total() {
            let objects = tuples.decode(code);
            let mut dims: Vec<usize> = (0..=n).map(|j| c.hom_dim(objects[(j + 1) % (n + 1)], objects[j])).collect();
            dims.push(md);
            let radix = Radix::new(&dims);
            let size = radix.total();
            if size == 0 {
                continue;
            }
            lookup[code] = Some(blocks.len());
            blocks.push(Block { objects, radix, offset });
            offset += size;
        }
        NerveLayout {
            n,
            blocks,
            lookup,
            nobj,
            total: offset,
        }
    }

    pub fn block_of(&self, objects: &[usize]) -> Option<&Block> {
        let code = objects.iter().fold(0, |acc, &o| acc * self.nobj + o);
        self.lookup[code].map(|b| &self.blocks[b])
    }

    /// Block and digits of a basis index.
    pub fn locate(&self, idx: usize) -> (&Block, Vec<usize>) {
        let b = match self.blocks.binary_search_by(|b| b.offset.cmp(&idx)) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let block = &self.blocks[b];
        (block, block.radix.decode(idx - block.offset))
    }

    /// The basis expansion of `factors[0] ⊗ … ⊗ factors[n+1]` in the block
    /// of `objects`; zero if the block is empty.
    pub fn pure(&self, objects: &[usize], factors: &[SparseVec]) -> SparseVec {
        match self.block_of(objects) {
            Some(b) => {
                let refs: Vec<&SparseVec> = factors.iter().collect();
                kron_all(&refs, b.radix.dims()).shifted(b.offset)
            }
            None => SparseVec::new(),
        }
    }
}

/// `T(C,M)` with its layouts.
#[derive(Clone, Debug)]
pub struct CategoryNerve {
    pub module: ParaCyclicHModule,
    pub layouts: Vec<NerveLayout>,
    pub category: HCategory,
    pub coefficients: StableModuleComodule,
}

fn matrix_from(rows: usize, cols: usize, f: impl Fn(usize) -> SparseVec) -> SparseMatrix {
    SparseMatrix::from_columns(rows, (0..cols).map(f).collect())
}

/// `(h, m0, coefficient)` terms of a left coaction lift.
fn coaction(rho: &SparseMatrix, md: usize, m: usize) -> Vec<(usize, usize, Scalar)> {
    rho.col(m).iter().map(|(idx, c)| (idx / md, idx % md, c.clone())).collect()
}

/// Builds `T_n(C,M)` for `n ≤ n_max`:
///
/// * `d_i` composes `f_i f_{i+1}` for `i < n`, and
///   `d_n = (m_[-1] f_n) f_0 ⊗ f_1 ⊗ … ⊗ f_{n-1} ⊗ m_[0]`;
/// * `s_i` inserts an identity after `f_i`;
/// * `τ = m_[-1] f_n ⊗ f_0 ⊗ … ⊗ f_{n-1} ⊗ m_[0]`, with inverse
///   `f_1 ⊗ … ⊗ f_n ⊗ S^{-1}(m_[-1]) f_0 ⊗ m_[0]` through the other coaction;
/// * `(f_0 ⊗ … ⊗ f_n ⊗ m)·h = S^{-1}(h_(1)) f_0 ⊗ … ⊗ S^{-1}(h_(n+2)) m`.
///
/// The result is pseudo-para-cyclic. Only a one-dimensional base is supported.
pub fn build_t_category(h: &HopfAlgebroid, c: &HCategory, m: &StableModuleComodule, n_max: usize) -> Result<CategoryNerve> {
    if h.left.base().dim() != 1 {
        return Err(Error::Unsupported("category nerves are built over a one-dimensional base only".into()));
    }
    if m.orientation() != Orientation::Left || m.module.side != Side::Left {
        return Err(Error::InvalidInstance("T(C,M) needs left-left coefficients".into()));
    }
    let k = c.len();
    let hd = h.dim();
    let md = m.dim();
    let sinv: Vec<SparseVec> = (0..hd).map(|x| h.s_inv(&SparseVec::unit(x))).collect();
    let hom_sinv: Vec<Vec<Vec<SparseMatrix>>> = (0..k)
        .map(|x| (0..k).map(|y| sinv.iter().map(|s| c.act(x, y, s)).collect()).collect())
        .collect();
    let m_sinv: Vec<SparseMatrix> = sinv.iter().map(|s| m.module.act(s)).collect();
    let layouts: Vec<NerveLayout> = (0..=n_max).map(|n| NerveLayout::new(c, md, n)).collect();
    let rho_l = &m.comodule.rho_l;
    let rho_r = &m.comodule.rho_r;

    let mut x = ParaCyclicHModule {
        n_max,
        h_dim: hd,
        dims: Vec::new(),
        faces: Vec::new(),
        degeneracies: Vec::new(),
        tau: Vec::new(),
        tau_inv: Vec::new(),
        action: Vec::new(),
        pseudo: true,
        para: true,
        presentation: Vec::new(),
    };
    for n in 0..=n_max {
        let lay = &layouts[n];
        let dim = lay.total;
        x.dims.push(dim);
        x.presentation.push(Presentation::identity(dim));
        let obj = |o: &[usize], j: usize| o[j % (n + 1)];

        let mut faces = Vec::new();
        if n > 0 {
            let low = &layouts[n - 1];
            for i in 0..n {
                faces.push(matrix_from(low.total, dim, |idx| {
                    let (b, dg) = lay.locate(idx);
                    let o = &b.objects;
                    let comp = c.compose_vec(
                        obj(o, i + 2),
                        obj(o, i + 1),
                        o[i],
                        &SparseVec::unit(dg[i]),
                        &SparseVec::unit(dg[i + 1]),
                    );
                    let mut objs = o.clone();
                    objs.remove(i + 1);
                    let mut fs: Vec<SparseVec> = dg.iter().map(|&d| SparseVec::unit(d)).collect();
                    fs.splice(i..i + 2, [comp]);
                    low.pure(&objs, &fs)
                }));
            }
            faces.push(matrix_from(low.total, dim, |idx| {
                let (b, dg) = lay.locate(idx);
                let o = &b.objects;
                let mut acc = Accumulator::new();
                for (hk, m0, coef) in coaction(rho_l, md, dg[n + 1]) {
                    let g = c.homs[o[0]][o[n]].action[hk].col(dg[n]);
                    let comp = c.compose_vec(o[1], o[0], o[n], g, &SparseVec::unit(dg[0]));
                    let mut objs = vec![o[n]];
                    objs.extend_from_slice(&o[1..n]);
                    let mut fs = vec![comp];
                    fs.extend(dg[1..n].iter().map(|&d| SparseVec::unit(d)));
                    fs.push(SparseVec::unit(m0));
                    acc.add_scaled(&coef, &low.pure(&objs, &fs));
                }
                acc.finish()
            }));
        }
        x.faces.push(faces);

        let mut degs = Vec::new();
        if n < n_max {
            let up = &layouts[n + 1];
            for i in 0..=n {
                degs.push(matrix_from(up.total, dim, |idx| {
                    let (b, dg) = lay.locate(idx);
                    let o = &b.objects;
                    let mut objs = o.clone();
                    objs.insert(i + 1, obj(o, i + 1));
                    let mut fs: Vec<SparseVec> = dg.iter().map(|&d| SparseVec::unit(d)).collect();
                    fs.insert(i + 1, c.identity[obj(o, i + 1)].clone());
                    up.pure(&objs, &fs)
                }));
            }
        }
        x.degeneracies.push(degs);

        x.tau.push(matrix_from(dim, dim, |idx| {
            let (b, dg) = lay.locate(idx);
            let o = &b.objects;
            let mut acc = Accumulator::new();
            for (hk, m0, coef) in coaction(rho_l, md, dg[n + 1]) {
                let mut objs = vec![o[n]];
                objs.extend_from_slice(&o[..n]);
                let mut fs = vec![c.homs[o[0]][o[n]].action[hk].col(dg[n]).clone()];
                fs.extend(dg[..n].iter().map(|&d| SparseVec::unit(d)));
                fs.push(SparseVec::unit(m0));
                acc.add_scaled(&coef, &lay.pure(&objs, &fs));
            }
            acc.finish()
        }));

        x.tau_inv.push(matrix_from(dim, dim, |idx| {
            let (b, dg) = lay.locate(idx);
            let o = &b.objects;
            let mut acc = Accumulator::new();
            for (hk, m0, coef) in coaction(rho_r, md, dg[n + 1]) {
                let mut objs = o[1..].to_vec();
                objs.push(o[0]);
                let mut fs: Vec<SparseVec> = dg[1..=n].iter().map(|&d| SparseVec::unit(d)).collect();
                fs.push(hom_sinv[obj(o, 1)][o[0]][hk].col(dg[0]).clone());
                fs.push(SparseVec::unit(m0));
                acc.add_scaled(&coef, &lay.pure(&objs, &fs));
            }
            acc.finish()
        }));

        let legs = n + 2;
        let leg_radix = Radix::new(&vec![hd; legs]);
        let mut action = Vec::with_capacity(hd);
        for kk in 0..hd {
            let terms: Vec<(Vec<usize>, Scalar)> = h
                .left
                .sweedler_expand(&SparseVec::unit(kk), legs)
                .iter()
                .map(|(i, a)| (leg_radix.decode(i), a.clone()))
                .collect();
            action.push(matrix_from(dim, dim, |idx| {
                let (b, dg) = lay.locate(idx);
                let o = &b.objects;
                let mut acc = Accumulator::new();
                for (ks, coef) in &terms {
                    let mut fs: Vec<SparseVec> = (0..=n)
                        .map(|j| hom_sinv[obj(o, j + 1)][o[j]][ks[j]].col(dg[j]).clone())
                        .collect();
                    fs.push(m_sinv[ks[n + 1]].col(dg[n + 1]).clone());
                    acc.add_scaled(coef, &lay.pure(o, &fs));
                }
                acc.finish()
            }));
        }
        x.action.push(action);
    }
    Ok(CategoryNerve {
        module: x,
        layouts,
        category: c.clone(),
        coefficients: m.clone(),
    })
}

/// `Q(C,M)`: `Q^H` of the nerve, then the counit-invariant equalizer of
/// `τ^{n+1}` and the identity.
pub fn build_q_category(h: &HopfAlgebroid, t: &CategoryNerve, policy: PowerPolicy) -> Result<CyclicHModule> {
    let (qh, _) = build_qh(&t.module, policy)?;
    build_q_equalizer(&qh, h)
}

/// `CC(LS) = T(LS, L)` with L = ℚ carrying the counit action and trivial
/// coactions. Basis vectors are the object cycles `(c_0, …, c_n)`.
pub fn build_ccls(h: &HopfAlgebroid, n_max: usize) -> Result<CategoryNerve> {
    let ls = build_ls(h)?;
    build_t_category(h, &ls, &StableModuleComodule::trivial(h, Orientation::Left), n_max)
}

/// One way of conjugating at a position of a cycle: the new object, and
/// optional maps `u : F X -> obj` on the left and `v : obj -> F X` on the
/// right. Absent maps are identities.
#[derive(Clone, Debug)]
struct Choice {
    obj: usize,
    u: Option<SparseVec>,
    v: Option<SparseVec>,
}

/// `f_0 ⊗ … ⊗ f_n ⊗ m ↦ Σ ⊗_j u_{o_j} F(f_j) v_{o_{j+1}} ⊗ m`, summed over
/// one choice per position. Compositions happen in `comp`; output objects
/// are translated by `out_obj` into the layout `dst`.
struct Conjugation<'a> {
    comp: &'a HCategory,
    functor: &'a HFunctor,
    dst: &'a NerveLayout,
    out_obj: &'a dyn Fn(usize) -> usize,
}

impl Conjugation<'_> {
    fn image(&self, objects: &[usize], digits: &[usize], choices: &[&[Choice]]) -> SparseVec {
        let n = objects.len() - 1;
        let fo = &self.functor.object_map;
        let fx: Vec<SparseVec> = (0..=n)
            .map(|j| self.functor.apply(objects[(j + 1) % (n + 1)], objects[j], &SparseVec::unit(digits[j])))
            .collect();
        let mut acc = Accumulator::new();
        let counts: Vec<usize> = choices.iter().map(|c| c.len()).collect();
        if counts.contains(&0) {
            return SparseVec::new();
        }
        let pick = Radix::new(&counts);
        for code in 0..pick.total() {
            let sel = pick.decode(code);
            let ch: Vec<&Choice> = (0..=n).map(|j| &choices[j][sel[j]]).collect();
            let mut fs = Vec::with_capacity(n + 2);
            for j in 0..=n {
                let (tgt, src) = (fo[objects[j]], fo[objects[(j + 1) % (n + 1)]]);
                let right = ch[(j + 1) % (n + 1)];
                let mut w = fx[j].clone();
                let mut from = src;
                if let Some(v) = &right.v {
                    w = self.comp.compose_vec(right.obj, src, tgt, &w, v);
                    from = right.obj;
                }
                if let Some(u) = &ch[j].u {
                    w = self.comp.compose_vec(from, tgt, ch[j].obj, u, &w);
                }
                fs.push(w);
            }
            fs.push(SparseVec::unit(digits[n + 1]));
            let objs: Vec<usize> = ch.iter().map(|c| (self.out_obj)(c.obj)).collect();
            acc.add_vec(&self.dst.pure(&objs, &fs));
        }
        acc.finish()
    }

    /// The image of a nerve vector.
    fn apply<'c>(&self, src: &NerveLayout, v: &SparseVec, choices: &dyn Fn(usize, usize) -> &'c [Choice]) -> SparseVec {
        let mut acc = Accumulator::new();
        for (idx, a) in v.iter() {
            let (b, dg) = src.locate(idx);
            let ch: Vec<&[Choice]> = b.objects.iter().enumerate().map(|(j, &o)| choices(j, o)).collect();
            acc.add_scaled(a, &self.image(&b.objects, &dg, &ch));
        }
        acc.finish()
    }
}

fn plain_choices(c: &HCategory, f: &HFunctor) -> Vec<Vec<Choice>> {
    (0..c.len())
        .map(|x| {
            vec![Choice {
                obj: f.object_map[x],
                u: None,
                v: None,
            }]
        })
        .collect()
}

/// `Q(F,M)`: `f_0 ⊗ … ⊗ f_n ⊗ m ↦ F(f_0) ⊗ … ⊗ F(f_n) ⊗ m` between the
/// Q-modules of two nerves.
pub fn induced_chain_map(
    f: &HFunctor,
    src: &CategoryNerve,
    q_src: &CyclicHModule,
    dst: &CategoryNerve,
    q_dst: &CyclicHModule,
) -> Result<GradedMap> {
    let plain = plain_choices(&src.category, f);
    let id = |o: usize| o;
    (0..=q_src.n_max.min(q_dst.n_max))
        .map(|n| {
            let conj = Conjugation {
                comp: &dst.category,
                functor: f,
                dst: &dst.layouts[n],
                out_obj: &id,
            };
            q_src.induce_into(n, q_dst, n, |v| conj.apply(&src.layouts[n], v, &|_, o| &plain[o]))
        })
        .collect()
}

/// A semi-cyclic map `ħ : X ⊗ CC(LS) -> Y` with the two edge inclusions
/// `ε_i(Φ) = Φ ⊗ (i, …, i)` and a report of the edge identities.
#[derive(Clone, Debug)]
pub struct Homotopy {
    pub source: ParaCyclicHModule,
    pub maps: GradedMap,
    pub edge0: GradedMap,
    pub edge1: GradedMap,
    pub report: Report,
}

fn edges(x: &ParaCyclicHModule, cc: &CategoryNerve, n_max: usize) -> (GradedMap, GradedMap) {
    let edge = |i: usize| -> GradedMap {
        (0..=n_max)
            .map(|n| {
                let ccd = cc.layouts[n].total;
                let at = cc.layouts[n].block_of(&vec![i; n + 1]).expect("constant cycle").offset;
                matrix_from(x.dims[n] * ccd, x.dims[n], |k| SparseVec::unit(k * ccd + at))
            })
            .collect()
    };
    (edge(0), edge(1))
}

/// Builds `ħ` on `Q(src) ⊗ CC(LS)` from per-label choice tables
/// (`tables[label][object]`), in the degrees `CC(LS)` was built for.
#[allow(clippy::too_many_arguments)]
fn labelled_homotopy(
    src: &CategoryNerve,
    q_src: &CyclicHModule,
    dst: &CategoryNerve,
    q_dst: &CyclicHModule,
    functor: &HFunctor,
    tables: &[Vec<Vec<Choice>>; 2],
    cc: &CategoryNerve,
) -> Result<Homotopy> {
    let source = tensor_product(q_src, &cc.module);
    let n_max = source.n_max;
    let id = |o: usize| o;
    let mut maps = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let conj = Conjugation {
            comp: &dst.category,
            functor,
            dst: &dst.layouts[n],
            out_obj: &id,
        };
        let ccl = &cc.layouts[n];
        let ccd = ccl.total;
        let lifts: Vec<SparseVec> = (0..q_src.dims[n])
            .map(|k| q_src.presentation[n].lift(&SparseVec::unit(k)))
            .collect();
        let mut cols = Vec::with_capacity(q_src.dims[n] * ccd);
        for (k, lift) in lifts.iter().enumerate() {
            for l in 0..ccd {
                let labels = &ccl.locate(l).0.objects;
                let image = conj.apply(&src.layouts[n], lift, &|j, o| &tables[labels[j]][o]);
                let c = q_dst.presentation[n].reduce(&image).ok_or_else(|| {
                    Error::Restriction(format!("homotopy image of ({k}, {l}) in degree {n} leaves Q"))
                })?;
                cols.push(c);
            }
        }
        maps.push(SparseMatrix::from_columns(q_dst.dims[n], cols));
    }
    let (edge0, edge1) = edges(q_src, cc, n_max);
    Ok(Homotopy {
        source,
        maps,
        edge0,
        edge1,
        report: Report::new("special homotopy"),
    })
}

fn record_edges(hom: &mut Homotopy, target: &ParaCyclicHModule, at0: &GradedMap, at1: &GradedMap, names: [&str; 2]) {
    let mut r = check_semicyclic_map(&hom.maps, &hom.source, target);
    r.subject = "special homotopy".into();
    let h0 = compose_graded(&hom.maps, &hom.edge0);
    let h1 = compose_graded(&hom.maps, &hom.edge1);
    let ax = r.axiom(names[0]);
    for (n, (a, b)) in h0.iter().zip(at0).enumerate() {
        compare_matrices(ax, &[n], a, b);
    }
    let ax = r.axiom(names[1]);
    for (n, (a, b)) in h1.iter().zip(at1).enumerate() {
        compare_matrices(ax, &[n], a, b);
    }
    hom.report = r;
}

/// `ħ` from a natural isomorphism `η : F ⇒ G` of equivariant functors
/// `c -> d`: on the cycle with labels `(c_0, …, c_n)`, the factor `f_j`
/// becomes `F(f_j)`, preceded by `η` when `c_j = 1` and followed by `η^{-1}`
/// when `c_{j+1} = 1`.
#[allow(clippy::too_many_arguments)]
pub fn special_homotopy_from_nat_iso(
    h: &HopfAlgebroid,
    src: &CategoryNerve,
    q_src: &CyclicHModule,
    dst: &CategoryNerve,
    q_dst: &CyclicHModule,
    f: &HFunctor,
    g: &HFunctor,
    eta: &NaturalIso,
    cc: &CategoryNerve,
) -> Result<Homotopy> {
    let pre = check_nat_iso(h, &src.category, &dst.category, f, g, eta);
    if !pre.passed() {
        return Err(Error::Naturality(pre.failed_axioms().join(", ")));
    }
    let label0 = plain_choices(&src.category, f);
    let label1: Vec<Vec<Choice>> = (0..src.category.len())
        .map(|x| {
            vec![Choice {
                obj: g.object_map[x],
                u: Some(eta.components[x].clone()),
                v: Some(eta.inverses[x].clone()),
            }]
        })
        .collect();
    let mut hom = labelled_homotopy(src, q_src, dst, q_dst, f, &[label0, label1], cc)?;
    let qf = induced_chain_map(f, src, q_src, dst, q_dst)?;
    let qg = induced_chain_map(g, src, q_src, dst, q_dst)?;
    let qf: GradedMap = qf.into_iter().take(hom.maps.len()).collect();
    let qg: GradedMap = qg.into_iter().take(hom.maps.len()).collect();
    record_edges(&mut hom, q_dst, &qf, &qg, ["ħ ε_0 = Q(F)", "ħ ε_1 = Q(G)"]);
    Ok(hom)
}

/// The retraction `E : Q(c) -> Q(ξ)`, the inclusion `i : Q(ξ) -> Q(c)`, and
/// the special homotopy between `id` and `i E`.
#[derive(Clone, Debug)]
pub struct Retraction {
    pub sub_nerve: CategoryNerve,
    pub q_sub: CyclicHModule,
    pub e: GradedMap,
    pub inclusion: GradedMap,
    pub homotopy: Homotopy,
}

/// `E_n(f_0 ⊗ … ⊗ f_n ⊗ m) = Σ u_{i_0} f_0 v_{i_1} ⊗ u_{i_1} f_1 v_{i_2} ⊗ …
/// ⊗ u_{i_n} f_n v_{i_0} ⊗ m`, with one summation index per object of the
/// cycle, and `ħ` conjugating exactly at the positions labelled 1.
#[allow(clippy::too_many_arguments)]
pub fn separation_retraction(
    h: &HopfAlgebroid,
    c: &CategoryNerve,
    q_c: &CyclicHModule,
    xi: &[usize],
    w: &SeparationWitness,
    cc: &CategoryNerve,
    policy: PowerPolicy,
) -> Result<Retraction> {
    let pre = check_separated(h, &c.category, xi, w);
    if !pre.passed() {
        return Err(Error::InvalidInstance(format!("separation witness rejected:\n{pre}")));
    }
    let (sub, incl) = full_subcategory(&c.category, xi);
    let sub_nerve = build_t_category(h, &sub, &c.coefficients, q_c.n_max)?;
    let q_sub = build_q_category(h, &sub_nerve, policy)?;
    let id = HFunctor::identity(&c.category);
    let label0 = plain_choices(&c.category, &id);
    let label1: Vec<Vec<Choice>> = w
        .pieces
        .iter()
        .map(|ps| {
            ps.iter()
                .map(|(o, u, v)| Choice {
                    obj: *o,
                    u: Some(u.clone()),
                    v: Some(v.clone()),
                })
                .collect()
        })
        .collect();
    let position_in_xi = |o: usize| xi.iter().position(|&x| x == o).expect("piece object in the subcategory");
    let e: GradedMap = (0..=q_c.n_max)
        .map(|n| {
            let conj = Conjugation {
                comp: &c.category,
                functor: &id,
                dst: &sub_nerve.layouts[n],
                out_obj: &position_in_xi,
            };
            q_c.induce_into(n, &q_sub, n, |v| conj.apply(&c.layouts[n], v, &|_, o| &label1[o]))
        })
        .collect::<Result<_>>()?;
    let inclusion = induced_chain_map(&incl, &sub_nerve, &q_sub, c, q_c)?;
    let mut hom = labelled_homotopy(c, q_c, c, q_c, &id, &[label0, label1], cc)?;
    let ie: GradedMap = compose_graded(&inclusion, &e).into_iter().take(hom.maps.len()).collect();
    let ident: GradedMap = identity_map(q_c).into_iter().take(hom.maps.len()).collect();
    record_edges(&mut hom, q_c, &ident, &ie, ["ħ ε_0 = id", "ħ ε_1 = i E"]);
    Ok(Retraction {
        sub_nerve,
        q_sub,
        e,
        inclusion,
        homotopy: hom,
    })
}

/// The degreewise map `Q(*^A, M') -> Q(A, M)` sending
/// `f_0 ⊗ … ⊗ f_n ⊗ m` to `f_0(1) ⊗ … ⊗ f_n(1) ⊗ m`.
pub fn oneobj_iso(star: &CategoryNerve, q_star: &CyclicHModule, alg: &AlgebraNerve, q_alg: &CyclicHModule) -> Result<GradedMap> {
    let c = &star.category;
    let r = c
        .realization
        .as_ref()
        .ok_or_else(|| Error::Unsupported("the one-object comparison needs a realized category".into()))?;
    let a_mod = &r.modules[0];
    let unit = a_mod.base.algebra.unit().clone();
    let images: Vec<SparseVec> = (0..c.hom_dim(0, 0))
        .map(|b| c.realize(0, 0, &SparseVec::unit(b)).expect("realized").apply(&unit))
        .collect();
    (0..=q_star.n_max.min(q_alg.n_max))
        .map(|n| {
            let lay = &star.layouts[n];
            let chain = &alg.chains[n];
            let dims = chain.radix.dims().to_vec();
            q_star.induce_into(n, q_alg, n, |v| {
                let mut acc = Accumulator::new();
                for (idx, a) in v.iter() {
                    let (_, dg) = lay.locate(idx);
                    let mut fs: Vec<&SparseVec> = dg[..=n].iter().map(|&d| &images[d]).collect();
                    let m = SparseVec::unit(dg[n + 1]);
                    fs.push(&m);
                    acc.add_scaled(a, &kron_all(&fs, &dims));
                }
                chain.project(&acc.finish())
            })
        })
        .collect()
}
