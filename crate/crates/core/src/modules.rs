//! Modules, module algebras, equivariant modules, comodules and stable
//! module/comodules over a Hopf algebroid.
//!
//! Right-side conventions mirror the left ones through the right
//! bialgebroid: `(ab)◁h = (a◁h^(1))(b◁h^(2))` and `1◁h = 1◁s_R ε_R(h)`.

use crate::algebra::{apply_kron, check_algebra, FiniteAlgebra, Junction, TensorChain};
use crate::error::{Error, Result};
use crate::hopf::{Bialgebroid, HopfAlgebroid, Side};
use crate::linalg::{Accumulator, SparseMatrix, SparseVec};
use crate::report::Report;

/// A left or right H-module. `action[h]` is `m ↦ h·m` for left modules and
/// `m ↦ m·h` for right modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    pub side: Side,
    pub dim: usize,
    pub action: Vec<SparseMatrix>,
}

impl HModule {
    pub fn new(side: Side, dim: usize, action: Vec<SparseMatrix>) -> Self {
        HModule { side, dim, action }
    }

    /// Action through the counit: `h·m = s ε(h)·m` on the ground field.
    pub fn trivial(h: &HopfAlgebroid, side: Side) -> Self {
        let eps = match side {
            Side::Left => h.left.counit(),
            Side::Right => h.right.counit(),
        };
        let action = (0..h.dim())
            .map(|x| {
                let c = eps.col(x).get(0).cloned().unwrap_or_else(crate::scalar::Scalar::zero);
                SparseMatrix::identity(1).scaled(&c)
            })
            .collect();
        HModule::new(side, 1, action)
    }

    /// Action matrix of an arbitrary element.
    pub fn act(&self, h: &SparseVec) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.dim, self.dim);
        for (i, a) in h.iter() {
            out = out.add_scaled(a, &self.action[i]);
        }
        out
    }

    /// Direct sum with diagonal action.
    pub fn direct_sum(&self, other: &HModule) -> HModule {
        assert_eq!(self.side, other.side);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| block_diag(a, b))
            .collect();
        HModule::new(self.side, self.dim + other.dim, action)
    }

    /// Left base action `b ↦ (m ↦ b·m)` induced through source/target maps.
    pub fn base_left(&self, bialg: &Bialgebroid) -> Vec<SparseMatrix> {
        (0..bialg.base().dim())
            .map(|b| match self.side {
                Side::Left => self.act(bialg.source().col(b)),
                Side::Right => self.act(bialg.target().col(b)),
            })
            .collect()
    }

    /// Right base action `b ↦ (m ↦ m·b)`.
    pub fn base_right(&self, bialg: &Bialgebroid) -> Vec<SparseMatrix> {
        (0..bialg.base().dim())
            .map(|b| match self.side {
                Side::Left => self.act(bialg.target().col(b)),
                Side::Right => self.act(bialg.source().col(b)),
            })
            .collect()
    }
}

pub fn block_diag(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    let mut cols: Vec<SparseVec> = a.columns().to_vec();
    cols.extend(b.columns().iter().map(|c| c.shifted(a.nrows())));
    SparseMatrix::from_columns(a.nrows() + b.nrows(), cols)
}

pub fn check_module(h: &HopfAlgebroid, m: &HModule) -> Report {
    let mut r = Report::new(match m.side {
        Side::Left => "left H-module",
        Side::Right => "right H-module",
    });
    let alg = h.total();
    if m.action.len() != alg.dim() || m.action.iter().any(|a| a.nrows() != m.dim || a.ncols() != m.dim) {
        r.note("shape", false, "one square action matrix per basis element of H");
        return r;
    }
    let ax = r.axiom("unital");
    let one = m.act(alg.unit());
    for j in 0..m.dim {
        ax.compare(&[j], one.col(j), &SparseVec::unit(j));
    }
    let ax = r.axiom("associative");
    for x in 0..alg.dim() {
        for y in 0..alg.dim() {
            let lhs = m.act(alg.basis_product(x, y));
            let rhs = match m.side {
                Side::Left => m.action[x].compose(&m.action[y]),
                Side::Right => m.action[y].compose(&m.action[x]),
            };
            for j in 0..m.dim {
                ax.compare(&[x, y, j], lhs.col(j), rhs.col(j));
            }
        }
    }
    r
}

/// An algebra with an H-action on the side given by `module.side`.
#[derive(Clone, Debug)]
pub struct ModuleAlgebra {
    pub algebra: FiniteAlgebra,
    pub module: HModule,
}

impl ModuleAlgebra {
    pub fn side(&self) -> Side {
        self.module.side
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `h` acting on `a`.
    pub fn act(&self, h: &SparseVec, a: &SparseVec) -> SparseVec {
        self.module.act(h).apply(a)
    }
}

pub fn check_module_algebra(h: &HopfAlgebroid, ma: &ModuleAlgebra) -> Report {
    let mut r = Report::new(match ma.side() {
        Side::Left => "left module algebra",
        Side::Right => "right module algebra",
    });
    r.absorb(check_algebra(&ma.algebra));
    r.absorb(check_module(h, &ma.module));
    if !r.passed() {
        return r;
    }
    let a = &ma.algebra;
    let bialg = match ma.side() {
        Side::Left => &h.left,
        Side::Right => &h.right,
    };
    let hd = h.dim();
    let ax = r.axiom("action on products");
    for x in 0..hd {
        let d = bialg.delta(&SparseVec::unit(x));
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = ma.module.action[x].apply(a.basis_product(i, j));
                let mut acc = Accumulator::new();
                for (idx, c) in d.iter() {
                    let (p, q) = (idx / hd, idx % hd);
                    let left = ma.module.action[p].col(i);
                    let right = ma.module.action[q].col(j);
                    acc.add_scaled(c, &a.mul(left, right));
                }
                ax.compare(&[x, i, j], &lhs, &acc.finish());
            }
        }
    }
    let ax = r.axiom("action on unit");
    for x in 0..hd {
        let e = SparseVec::unit(x);
        let lhs = ma.module.action[x].apply(a.unit());
        let eps = bialg.counit().apply(&e);
        let via_s = ma.act(&bialg.source().apply(&eps), a.unit());
        let via_t = ma.act(&bialg.target().apply(&eps), a.unit());
        ax.compare(&[x, 0], &lhs, &via_s);
        ax.compare(&[x, 1], &lhs, &via_t);
    }
    r
}

/// A left H-module with a right A-module structure, for a left module
/// algebra A, satisfying `h(ma) = (h_(1)·m)(h_(2)▷a)`.
#[derive(Clone, Debug)]
pub struct EquivariantModule {
    pub base: ModuleAlgebra,
    pub dim: usize,
    /// `right_a[a]` is `m ↦ m·a`.
    pub right_a: Vec<SparseMatrix>,
    /// `left_h[h]` is `m ↦ h·m`.
    pub left_h: Vec<SparseMatrix>,
}

impl EquivariantModule {
    /// A as a right module over itself.
    pub fn regular(base: &ModuleAlgebra) -> Self {
        let a = &base.algebra;
        EquivariantModule {
            base: base.clone(),
            dim: a.dim(),
            right_a: (0..a.dim()).map(|i| a.right_mul_matrix(&SparseVec::unit(i))).collect(),
            left_h: base.module.action.clone(),
        }
    }

    /// The free module A^k with diagonal actions.
    pub fn free(base: &ModuleAlgebra, k: usize) -> Self {
        let one = EquivariantModule::regular(base);
        let mut out = one.clone();
        for _ in 1..k {
            out = out.direct_sum(&one);
        }
        out
    }

    pub fn direct_sum(&self, other: &EquivariantModule) -> Self {
        EquivariantModule {
            base: self.base.clone(),
            dim: self.dim + other.dim,
            right_a: self
                .right_a
                .iter()
                .zip(&other.right_a)
                .map(|(a, b)| block_diag(a, b))
                .collect(),
            left_h: self
                .left_h
                .iter()
                .zip(&other.left_h)
                .map(|(a, b)| block_diag(a, b))
                .collect(),
        }
    }

    pub fn act_h(&self, h: &SparseVec) -> SparseMatrix {
        combine(self.dim, &self.left_h, h)
    }

    pub fn act_a(&self, a: &SparseVec) -> SparseMatrix {
        combine(self.dim, &self.right_a, a)
    }
}

fn combine(dim: usize, mats: &[SparseMatrix], coeffs: &SparseVec) -> SparseMatrix {
    let mut out = SparseMatrix::zero(dim, dim);
    for (i, a) in coeffs.iter() {
        out = out.add_scaled(a, &mats[i]);
    }
    out
}

pub fn check_equivariant(h: &HopfAlgebroid, e: &EquivariantModule) -> Report {
    let mut r = Report::new("equivariant module");
    let a = &e.base.algebra;
    r.absorb(check_module(h, &HModule::new(Side::Left, e.dim, e.left_h.clone())));
    let ax = r.axiom("right A-module");
    let one = e.act_a(a.unit());
    ax.expect(&[], one.is_identity(), || ("m·1".into(), "m".into()));
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = e.act_a(a.basis_product(i, j));
            let rhs = e.right_a[j].compose(&e.right_a[i]);
            ax.expect(&[i, j], lhs == rhs, || ("m·(ab)".into(), "(m·a)·b".into()));
        }
    }
    let hd = h.dim();
    let ax = r.axiom("h(ma) = (h_(1)·m)(h_(2)▷a)");
    for x in 0..hd {
        let d = h.left.delta(&SparseVec::unit(x));
        for i in 0..a.dim() {
            let lhs = e.left_h[x].compose(&e.right_a[i]);
            let mut rhs = SparseMatrix::zero(e.dim, e.dim);
            for (idx, c) in d.iter() {
                let (p, q) = (idx / hd, idx % hd);
                let ha = e.base.module.action[q].col(i);
                rhs = rhs.add_scaled(c, &e.act_a(ha).compose(&e.left_h[p]));
            }
            for m in 0..e.dim {
                ax.compare(&[x, i, m], lhs.col(m), rhs.col(m));
            }
        }
    }
    r
}

/// Orientation of a comodule: right comodules coact as `M -> M ⊗ H`, left
/// ones as `M -> H ⊗ M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Right,
    Left,
}

/// A comodule over both corings of a Hopf algebroid, with coactions stored
/// as k-linear lifts. `base_l` and `base_r` give the L- and R-actions on
/// the side of M adjacent to H in the balanced tensor products.
#[derive(Clone, Debug)]
pub struct HopfComodule {
    pub orientation: Orientation,
    pub dim: usize,
    pub rho_l: SparseMatrix,
    pub rho_r: SparseMatrix,
    pub base_l: Vec<SparseMatrix>,
    pub base_r: Vec<SparseMatrix>,
}

impl HopfComodule {
    /// `m ↦ m ⊗ 1` (or `1 ⊗ m`) for both coactions.
    pub fn trivial(h: &HopfAlgebroid, orientation: Orientation, dim: usize) -> Self {
        let hd = h.dim();
        let one = h.total().unit();
        let cols: Vec<SparseVec> = (0..dim)
            .map(|m| match orientation {
                Orientation::Right => SparseVec::unit(m).kron(one, hd),
                Orientation::Left => one.kron(&SparseVec::unit(m), dim),
            })
            .collect();
        let rho = SparseMatrix::from_columns(dim * hd, cols);
        HopfComodule {
            orientation,
            dim,
            rho_l: rho.clone(),
            rho_r: rho,
            base_l: identity_family(h.left.base().dim(), dim),
            base_r: identity_family(h.right.base().dim(), dim),
        }
    }

    pub fn rho(&self, side: Side) -> &SparseMatrix {
        match side {
            Side::Left => &self.rho_l,
            Side::Right => &self.rho_r,
        }
    }

    fn base_action(&self, side: Side) -> &[SparseMatrix] {
        match side {
            Side::Left => &self.base_l,
            Side::Right => &self.base_r,
        }
    }

    /// Junction between M and H in `M ⊗_B H` (or `H ⊗_B M`).
    fn junction(&self, bialg: &Bialgebroid) -> Junction {
        let m = self.base_action(bialg.side()).to_vec();
        let j = bialg.junction();
        match self.orientation {
            Orientation::Right => Junction { right: m, left: j.left },
            Orientation::Left => Junction { right: j.right, left: m },
        }
    }
}

fn identity_family(n: usize, dim: usize) -> Vec<SparseMatrix> {
    // Only meaningful for a one-dimensional base, the only case where an
    // identity family is a unital action.
    vec![SparseMatrix::identity(dim); n]
}

fn bialg(h: &HopfAlgebroid, side: Side) -> &Bialgebroid {
    match side {
        Side::Left => &h.left,
        Side::Right => &h.right,
    }
}

pub fn check_comodule(h: &HopfAlgebroid, c: &HopfComodule) -> Report {
    let mut r = Report::new(match c.orientation {
        Orientation::Right => "right comodule",
        Orientation::Left => "left comodule",
    });
    let hd = h.dim();
    let md = c.dim;
    let idm = SparseMatrix::identity(md);
    let idh = SparseMatrix::identity(hd);
    for side in [Side::Left, Side::Right] {
        let b = bialg(h, side);
        let rho = c.rho(side);
        let tag = if side == Side::Left { "ρ_L" } else { "ρ_R" };
        if rho.nrows() != md * hd || rho.ncols() != md {
            r.note(format!("{tag} shape"), false, "coaction must be dim(M)·dim(H) x dim(M)");
            continue;
        }
        let (dims, junctions) = match c.orientation {
            Orientation::Right => (vec![md, hd, hd], vec![c.junction(b), b.junction()]),
            Orientation::Left => (vec![hd, hd, md], vec![b.junction(), c.junction(b)]),
        };
        let chain = TensorChain::with_junctions(&dims, &junctions);
        let ax = r.axiom(format!("{tag} coassociativity"));
        for m in 0..md {
            let v = rho.col(m);
            let (lhs, rhs) = match c.orientation {
                Orientation::Right => (apply_kron(&[rho, &idh], v), apply_kron(&[&idm, b.delta_lift()], v)),
                Orientation::Left => (apply_kron(&[&idh, rho], v), apply_kron(&[b.delta_lift(), &idm], v)),
            };
            ax.compare(&[m], &chain.project(&lhs), &chain.project(&rhs));
        }
        let ax = r.axiom(format!("{tag} counit"));
        let base = c.base_action(side);
        for m in 0..md {
            let mut acc = Accumulator::new();
            for (idx, a) in rho.col(m).iter() {
                let (mi, hi) = match c.orientation {
                    Orientation::Right => (idx / hd, idx % hd),
                    Orientation::Left => (idx % md, idx / md),
                };
                for (l, e) in b.counit().col(hi).iter() {
                    acc.add_scaled(&(a * e), base[l].col(mi));
                }
            }
            ax.compare(&[m], &acc.finish(), &SparseVec::unit(m));
        }
    }
    // mixed compatibilities
    for (outer, inner) in [(Side::Left, Side::Right), (Side::Right, Side::Left)] {
        let (bo, bi) = (bialg(h, outer), bialg(h, inner));
        let (ro, ri) = (c.rho(outer), c.rho(inner));
        if ro.nrows() != md * hd || ri.nrows() != md * hd {
            continue;
        }
        // Right: (ρ_inner ⊗_outer H) ρ_outer = (M ⊗_inner Δ_outer) ρ_inner in M ⊗_inner H ⊗_outer H.
        let (dims, junctions) = match c.orientation {
            Orientation::Right => (vec![md, hd, hd], vec![c.junction(bi), bo.junction()]),
            Orientation::Left => (vec![hd, hd, md], vec![bo.junction(), c.junction(bi)]),
        };
        let chain = TensorChain::with_junctions(&dims, &junctions);
        let name = match (c.orientation, outer) {
            (Orientation::Right, Side::Left) => "(ρ_R ⊗_L H)ρ_L = (M ⊗_R Δ_L)ρ_R",
            (Orientation::Right, Side::Right) => "(ρ_L ⊗_R H)ρ_R = (M ⊗_L Δ_R)ρ_L",
            (Orientation::Left, Side::Left) => "(H ⊗_L ρ_R)ρ_L = (Δ_L ⊗_R M)ρ_R",
            (Orientation::Left, Side::Right) => "(H ⊗_R ρ_L)ρ_R = (Δ_R ⊗_L M)ρ_L",
        };
        let ax = r.axiom(name);
        for m in 0..md {
            let (lhs, rhs) = match c.orientation {
                Orientation::Right => (
                    apply_kron(&[ri, &idh], ro.col(m)),
                    apply_kron(&[&idm, bo.delta_lift()], ri.col(m)),
                ),
                Orientation::Left => (
                    apply_kron(&[&idh, ri], ro.col(m)),
                    apply_kron(&[bo.delta_lift(), &idm], ri.col(m)),
                ),
            };
            ax.compare(&[m], &chain.project(&lhs), &chain.project(&rhs));
        }
    }
    r
}

/// A module/comodule with matching orientation; no compatibility between
/// action and coaction is assumed beyond stability.
#[derive(Clone, Debug)]
pub struct StableModuleComodule {
    pub module: HModule,
    pub comodule: HopfComodule,
}

impl StableModuleComodule {
    /// ℚ with the counit action and trivial coactions.
    pub fn trivial(h: &HopfAlgebroid, orientation: Orientation) -> Self {
        let side = match orientation {
            Orientation::Right => Side::Right,
            Orientation::Left => Side::Left,
        };
        StableModuleComodule {
            module: HModule::trivial(h, side),
            comodule: HopfComodule::trivial(h, orientation, 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn orientation(&self) -> Orientation {
        self.comodule.orientation
    }

    /// Direct sum with diagonal action and coactions.
    pub fn direct_sum(&self, other: &StableModuleComodule, hd: usize) -> StableModuleComodule {
        let (a, b) = (&self.comodule, &other.comodule);
        let total = a.dim + b.dim;
        let sum_rho = |x: &SparseMatrix, y: &SparseMatrix| -> SparseMatrix {
            let remap = |v: &SparseVec, own: usize, offset: usize| -> SparseVec {
                v.reindex(|idx| match a.orientation {
                    Orientation::Right => {
                        let (m, h) = (idx / hd, idx % hd);
                        (m + offset) * hd + h
                    }
                    Orientation::Left => {
                        let (h, m) = (idx / own, idx % own);
                        h * total + m + offset
                    }
                })
            };
            let mut cols: Vec<SparseVec> = x.columns().iter().map(|c| remap(c, a.dim, 0)).collect();
            cols.extend(y.columns().iter().map(|c| remap(c, b.dim, a.dim)));
            SparseMatrix::from_columns(total * hd, cols)
        };
        StableModuleComodule {
            module: self.module.direct_sum(&other.module),
            comodule: HopfComodule {
                orientation: a.orientation,
                dim: total,
                rho_l: sum_rho(&a.rho_l, &b.rho_l),
                rho_r: sum_rho(&a.rho_r, &b.rho_r),
                base_l: a.base_l.iter().zip(&b.base_l).map(|(x, y)| block_diag(x, y)).collect(),
                base_r: a.base_r.iter().zip(&b.base_r).map(|(x, y)| block_diag(x, y)).collect(),
            },
        }
    }
}

pub fn check_stability(h: &HopfAlgebroid, m: &StableModuleComodule) -> Report {
    let mut r = Report::new("stable module/comodule");
    let hd = h.dim();
    let md = m.dim();
    let c = &m.comodule;
    let expected_side = match c.orientation {
        Orientation::Right => Side::Right,
        Orientation::Left => Side::Left,
    };
    if m.module.side != expected_side || c.dim != md {
        r.note("orientation", false, "module side and comodule orientation disagree");
        return r;
    }
    for side in [Side::Left, Side::Right] {
        let rho = c.rho(side);
        let name = match (c.orientation, side) {
            (Orientation::Right, Side::Right) => "m^[0] m^[1] = m",
            (Orientation::Right, Side::Left) => "m_[0] m_[1] = m",
            (Orientation::Left, Side::Left) => "m_[-1] m_[0] = m (ρ_L)",
            (Orientation::Left, Side::Right) => "m_[-1] m_[0] = m (ρ_R)",
        };
        let ax = r.axiom(name);
        for x in 0..md {
            let mut acc = Accumulator::new();
            for (idx, a) in rho.col(x).iter() {
                let (mi, hi) = match c.orientation {
                    Orientation::Right => (idx / hd, idx % hd),
                    Orientation::Left => (idx % md, idx / md),
                };
                acc.add_scaled(a, m.module.action[hi].col(mi));
            }
            ax.compare(&[x], &acc.finish(), &SparseVec::unit(x));
        }
    }
    r
}

/// Direction for [`convert_action_via_antipode`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conversion {
    LeftToRight,
    RightToLeft,
}

/// `m◁h := S(h)▷m` (or `h▷m := m◁S(h)`). The result is a module on the other
/// side; it is not claimed to be a module algebra there.
pub fn convert_action_via_antipode(h: &HopfAlgebroid, m: &HModule, dir: Conversion) -> Result<HModule> {
    let want = match dir {
        Conversion::LeftToRight => Side::Left,
        Conversion::RightToLeft => Side::Right,
    };
    if m.side != want {
        return Err(Error::InvalidInstance(format!("expected a {want:?} module for {dir:?}")));
    }
    let action = (0..h.dim()).map(|x| m.act(h.antipode.col(x))).collect();
    let side = match dir {
        Conversion::LeftToRight => Side::Right,
        Conversion::RightToLeft => Side::Left,
    };
    Ok(HModule::new(side, m.dim, action))
}
