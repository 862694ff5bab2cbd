//! Bialgebroids and Hopf algebroids with exact axiom validators.
//!
//! Coproducts are stored as k-linear lifts `H -> H ⊗_k H`; every coring
//! axiom is compared after projecting to the balanced tensor product.
//!
//! Bimodule conventions on H:
//! * left bialgebroid: `l·h·l' = s_L(l) t_L(l') h`, so `H ⊗_L H` identifies
//!   `t_L(l) h ⊗ g` with `h ⊗ s_L(l) g`;
//! * right bialgebroid: `r·h·r' = h t_R(r) s_R(r')`, so `H ⊗_R H` identifies
//!   `h s_R(r) ⊗ g` with `h ⊗ g t_R(r)`.

use crate::algebra::{apply_kron, check_algebra, check_algebra_map, AlgebraMap, FiniteAlgebra, Junction, TensorChain};
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, SparseMatrix, SparseVec};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Left or right bialgebroid on a total algebra H over a base B.
#[derive(Clone, Debug)]
pub struct Bialgebroid {
    side: Side,
    total: FiniteAlgebra,
    base: FiniteAlgebra,
    source: SparseMatrix,
    target: SparseMatrix,
    delta: SparseMatrix,
    counit: SparseMatrix,
    pair: TensorChain,
    triple: TensorChain,
}

impl Bialgebroid {
    pub fn new(
        side: Side,
        total: FiniteAlgebra,
        base: FiniteAlgebra,
        source: SparseMatrix,
        target: SparseMatrix,
        delta: SparseMatrix,
        counit: SparseMatrix,
    ) -> Result<Self> {
        let (h, b) = (total.dim(), base.dim());
        shape("source", &source, h, b)?;
        shape("target", &target, h, b)?;
        shape("coproduct lift", &delta, h * h, h)?;
        shape("counit", &counit, b, h)?;
        let mut me = Bialgebroid {
            side,
            total,
            base,
            source,
            target,
            delta,
            counit,
            pair: TensorChain::plain(&[]),
            triple: TensorChain::plain(&[]),
        };
        let j = me.junction();
        me.pair = TensorChain::with_junctions(&[h, h], std::slice::from_ref(&j));
        me.triple = TensorChain::with_junctions(&[h, h, h], &[j.clone(), j]);
        Ok(me)
    }

    /// A Hopf algebra over ℚ viewed as a bialgebroid over the ground field.
    pub fn over_ground(side: Side, total: FiniteAlgebra, delta: SparseMatrix, counit: SparseMatrix) -> Result<Self> {
        let eta = SparseMatrix::from_columns(total.dim(), vec![total.unit().clone()]);
        Bialgebroid::new(side, total, FiniteAlgebra::ground(), eta.clone(), eta, delta, counit)
    }

    pub fn side(&self) -> Side {
        self.side
    }
    pub fn total(&self) -> &FiniteAlgebra {
        &self.total
    }
    pub fn base(&self) -> &FiniteAlgebra {
        &self.base
    }
    pub fn source(&self) -> &SparseMatrix {
        &self.source
    }
    pub fn target(&self) -> &SparseMatrix {
        &self.target
    }
    pub fn delta_lift(&self) -> &SparseMatrix {
        &self.delta
    }
    pub fn counit(&self) -> &SparseMatrix {
        &self.counit
    }
    /// `H ⊗_B H`.
    pub fn pair(&self) -> &TensorChain {
        &self.pair
    }
    /// `H ⊗_B H ⊗_B H`.
    pub fn triple(&self) -> &TensorChain {
        &self.triple
    }

    fn lmul(&self, x: &SparseVec) -> SparseMatrix {
        self.total.left_mul_matrix(x)
    }

    fn rmul(&self, x: &SparseVec) -> SparseMatrix {
        self.total.right_mul_matrix(x)
    }

    /// Left action of base element `b` on H.
    pub fn act_left(&self, b: usize) -> SparseMatrix {
        match self.side {
            Side::Left => self.lmul(self.source.col(b)),
            Side::Right => self.rmul(self.target.col(b)),
        }
    }

    /// Right action of base element `b` on H.
    pub fn act_right(&self, b: usize) -> SparseMatrix {
        match self.side {
            Side::Left => self.lmul(self.target.col(b)),
            Side::Right => self.rmul(self.source.col(b)),
        }
    }

    /// Balancing data for `H ⊗_B H`.
    pub fn junction(&self) -> Junction {
        Junction {
            right: (0..self.base.dim()).map(|b| self.act_right(b)).collect(),
            left: (0..self.base.dim()).map(|b| self.act_left(b)).collect(),
        }
    }

    pub fn delta(&self, h: &SparseVec) -> SparseVec {
        self.delta.apply(h)
    }

    /// Iterated coproduct lift with `legs` tensor legs, bracketed to the left:
    /// the coproduct is applied to the first leg at each step.
    pub fn sweedler_expand(&self, h: &SparseVec, legs: usize) -> SparseVec {
        assert!(legs >= 1);
        let d = self.total.dim();
        let mut v = h.clone();
        let mut rest = 1usize;
        for _ in 1..legs {
            let mut acc = Accumulator::new();
            for (idx, a) in v.iter() {
                let (first, tail) = (idx / rest, idx % rest);
                for (pq, c) in self.delta.col(first).iter() {
                    acc.add(pq * rest + tail, &(a * c));
                }
            }
            v = acc.finish();
            rest *= d;
        }
        v
    }

    /// The same expansion, bracketed to the right.
    pub fn sweedler_expand_right(&self, h: &SparseVec, legs: usize) -> SparseVec {
        let d = self.total.dim();
        let mut v = h.clone();
        for _ in 1..legs {
            let mut acc = Accumulator::new();
            for (idx, a) in v.iter() {
                let (front, last) = (idx / d, idx % d);
                for (pq, c) in self.delta.col(last).iter() {
                    acc.add(front * d * d + pq, &(a * c));
                }
            }
            v = acc.finish();
        }
        v
    }

    /// The multi-leg balanced tensor product over this base.
    pub fn chain(&self, legs: usize) -> TensorChain {
        let d = self.total.dim();
        let j = self.junction();
        TensorChain::with_junctions(&vec![d; legs], &vec![j; legs.saturating_sub(1)])
    }

    pub fn check(&self) -> Report {
        let name = match self.side {
            Side::Left => "left bialgebroid",
            Side::Right => "right bialgebroid",
        };
        let mut r = Report::new(name);
        let h = &self.total;
        let b = &self.base;
        let hd = h.dim();
        let bd = b.dim();
        let mut ta = check_algebra(h);
        ta.subject = "total algebra".into();
        r.absorb(ta);
        let mut ba = check_algebra(b);
        ba.subject = "base algebra".into();
        r.absorb(ba);
        let mut sm = check_algebra_map(&AlgebraMap::new(b.clone(), h.clone(), self.source.clone()));
        sm.subject = "source".into();
        r.absorb(sm);
        let mut tm = check_algebra_map(&AlgebraMap::new(b.opposite(), h.clone(), self.target.clone()));
        tm.subject = "target (from opposite base)".into();
        r.absorb(tm);

        let ax = r.axiom("source and target images commute");
        for i in 0..bd {
            for j in 0..bd {
                let (s, t) = (self.source.col(i), self.target.col(j));
                ax.compare(&[i, j], &h.mul(s, t), &h.mul(t, s));
            }
        }

        let pair = &self.pair;
        let id = SparseMatrix::identity(hd);
        let ax = r.axiom("coproduct is a left base-module map");
        for l in 0..bd {
            let act = self.act_left(l);
            for x in 0..hd {
                let e = SparseVec::unit(x);
                let lhs = pair.project(&self.delta(&act.apply(&e)));
                let rhs = pair.project(&apply_kron(&[&act, &id], &self.delta(&e)));
                ax.compare(&[l, x], &lhs, &rhs);
            }
        }
        let ax = r.axiom("coproduct is a right base-module map");
        for l in 0..bd {
            let act = self.act_right(l);
            for x in 0..hd {
                let e = SparseVec::unit(x);
                let lhs = pair.project(&self.delta(&act.apply(&e)));
                let rhs = pair.project(&apply_kron(&[&id, &act], &self.delta(&e)));
                ax.compare(&[l, x], &lhs, &rhs);
            }
        }
        let ax = r.axiom("counit is a base-bimodule map");
        for l in 0..bd {
            let (al, ar) = (self.act_left(l), self.act_right(l));
            let el = SparseVec::unit(l);
            for x in 0..hd {
                let e = SparseVec::unit(x);
                let eps = self.counit.apply(&e);
                ax.compare(&[l, x, 0], &self.counit.apply(&al.apply(&e)), &b.mul(&el, &eps));
                ax.compare(&[l, x, 1], &self.counit.apply(&ar.apply(&e)), &b.mul(&eps, &el));
            }
        }

        let triple = &self.triple;
        let ax = r.axiom("coassociativity");
        for x in 0..hd {
            let e = SparseVec::unit(x);
            let d = self.delta(&e);
            let lhs = triple.project(&apply_kron(&[&self.delta, &id], &d));
            let rhs = triple.project(&apply_kron(&[&id, &self.delta], &d));
            ax.compare(&[x], &lhs, &rhs);
        }

        let ax = r.axiom("counit laws");
        for x in 0..hd {
            let e = SparseVec::unit(x);
            let d = self.delta(&e);
            // ε(h_1)·h_2 and h_1·ε(h_2)
            let mut left = Accumulator::new();
            let mut right = Accumulator::new();
            for (idx, a) in d.iter() {
                let (p, q) = (idx / hd, idx % hd);
                let (ep, eq) = (self.counit.col(p), self.counit.col(q));
                for (l, c) in ep.iter() {
                    left.add_scaled(&(a * c), self.act_left(l).col(q));
                }
                for (l, c) in eq.iter() {
                    right.add_scaled(&(a * c), self.act_right(l).col(p));
                }
            }
            ax.compare(&[x, 0], &left.finish(), &e);
            ax.compare(&[x, 1], &right.finish(), &e);
        }

        let ax = r.axiom("Takeuchi condition");
        let mut takeuchi_ok = true;
        for l in 0..bd {
            let (s, t) = (self.source.col(l), self.target.col(l));
            let (first, second) = match self.side {
                Side::Left => (self.rmul(t), self.rmul(s)),
                Side::Right => (self.lmul(s), self.lmul(t)),
            };
            for x in 0..hd {
                let d = self.delta(&SparseVec::unit(x));
                let lhs = pair.project(&apply_kron(&[&first, &id], &d));
                let rhs = pair.project(&apply_kron(&[&id, &second], &d));
                takeuchi_ok &= ax.compare(&[l, x], &lhs, &rhs);
            }
        }

        let one = h.unit();
        let ax = r.axiom("coproduct of unit");
        ax.compare(&[], &pair.project(&self.delta(one)), &pair.pure(&[one, one]));

        if takeuchi_ok {
            let ax = r.axiom("multiplicativity of coproduct");
            let hh = h.tensor(h);
            for x in 0..hd {
                for y in 0..hd {
                    let lhs = pair.project(&self.delta(h.basis_product(x, y)));
                    let prod = hh.mul(&self.delta(&SparseVec::unit(x)), &self.delta(&SparseVec::unit(y)));
                    ax.compare(&[x, y], &lhs, &pair.project(&prod));
                }
            }
        } else {
            r.axiom("multiplicativity of coproduct (skipped: Takeuchi condition fails)");
        }

        r.axiom("counit of unit").compare(&[], &self.counit.apply(one), b.unit());

        let ax = r.axiom("weak multiplicativity of counit");
        for x in 0..hd {
            for y in 0..hd {
                let (ex, ey) = (SparseVec::unit(x), SparseVec::unit(y));
                let mid = self.counit.apply(h.basis_product(x, y));
                let (a, c) = match self.side {
                    Side::Left => {
                        let e = self.counit.apply(&ey);
                        (
                            h.mul(&ex, &self.source.apply(&e)),
                            h.mul(&ex, &self.target.apply(&e)),
                        )
                    }
                    Side::Right => {
                        let e = self.counit.apply(&ex);
                        (
                            h.mul(&self.source.apply(&e), &ey),
                            h.mul(&self.target.apply(&e), &ey),
                        )
                    }
                };
                ax.compare(&[x, y, 0], &self.counit.apply(&a), &mid);
                ax.compare(&[x, y, 1], &self.counit.apply(&c), &mid);
            }
        }
        r
    }
}

fn shape(what: &str, m: &SparseMatrix, rows: usize, cols: usize) -> Result<()> {
    if m.nrows() != rows || m.ncols() != cols {
        return Err(Error::InvalidInstance(format!(
            "{what} must be {rows}x{cols}, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(())
}

/// Hopf algebroid `(H_L, H_R, S)` with a bijective antipode.
#[derive(Clone, Debug)]
pub struct HopfAlgebroid {
    pub left: Bialgebroid,
    pub right: Bialgebroid,
    pub antipode: SparseMatrix,
    pub antipode_inv: SparseMatrix,
}

/// Interleaved chain `H ⊗_X H ⊗_Y H`.
fn mixed_triple(first: &Bialgebroid, second: &Bialgebroid) -> TensorChain {
    let d = first.total().dim();
    TensorChain::with_junctions(&[d, d, d], &[first.junction(), second.junction()])
}

impl HopfAlgebroid {
    pub fn new(left: Bialgebroid, right: Bialgebroid, antipode: SparseMatrix, antipode_inv: Option<SparseMatrix>) -> Result<Self> {
        if left.side() != Side::Left || right.side() != Side::Right {
            return Err(Error::InvalidInstance("bialgebroid sides are swapped".into()));
        }
        if left.total() != right.total() {
            return Err(Error::InvalidInstance(
                "left and right bialgebroids have different total algebras".into(),
            ));
        }
        let d = left.total().dim();
        shape("antipode", &antipode, d, d)?;
        let antipode_inv = match antipode_inv {
            Some(m) => {
                shape("inverse antipode", &m, d, d)?;
                m
            }
            None => invert(&antipode)
                .ok_or_else(|| Error::InvalidInstance("antipode is not invertible".into()))?,
        };
        Ok(HopfAlgebroid {
            left,
            right,
            antipode,
            antipode_inv,
        })
    }

    /// A Hopf algebra over ℚ: `L = R = ℚ`, all source and target maps the unit.
    pub fn from_hopf_algebra(h: FiniteAlgebra, delta: SparseMatrix, eps: SparseMatrix, s: SparseMatrix) -> Result<Self> {
        let left = Bialgebroid::over_ground(Side::Left, h.clone(), delta.clone(), eps.clone())?;
        let right = Bialgebroid::over_ground(Side::Right, h, delta, eps)?;
        HopfAlgebroid::new(left, right, s, None)
    }

    pub fn total(&self) -> &FiniteAlgebra {
        self.left.total()
    }

    pub fn dim(&self) -> usize {
        self.total().dim()
    }

    pub fn s(&self, h: &SparseVec) -> SparseVec {
        self.antipode.apply(h)
    }

    pub fn s_inv(&self, h: &SparseVec) -> SparseVec {
        self.antipode_inv.apply(h)
    }

    /// `s_R ε_R`, the right counit as an element of H.
    pub fn eps_r_in_h(&self, h: &SparseVec) -> SparseVec {
        self.right.source().apply(&self.right.counit().apply(h))
    }

    /// `s_L ε_L`.
    pub fn eps_l_in_h(&self, h: &SparseVec) -> SparseVec {
        self.left.source().apply(&self.left.counit().apply(h))
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("Hopf algebroid");
        r.absorb(self.left.check());
        r.absorb(self.right.check());
        let (hl, hr) = (&self.left, &self.right);
        let h = self.total();
        let d = h.dim();
        let (ld, rd) = (hl.base().dim(), hr.base().dim());
        let (s_l, t_l, e_l) = (hl.source(), hl.target(), hl.counit());
        let (s_r, t_r, e_r) = (hr.source(), hr.target(), hr.counit());
        let id = SparseMatrix::identity(d);

        let mut mat_eq = |name: &str, lhs: SparseMatrix, rhs: &SparseMatrix| {
            let ax = r.axiom(name);
            for j in 0..rhs.ncols() {
                ax.compare(&[j], lhs.col(j), rhs.col(j));
            }
        };
        mat_eq("s_L ε_L t_R = t_R", s_l.compose(&e_l.compose(t_r)), t_r);
        mat_eq("t_L ε_L s_R = s_R", t_l.compose(&e_l.compose(s_r)), s_r);
        mat_eq("s_R ε_R t_L = t_L", s_r.compose(&e_r.compose(t_l)), t_l);
        mat_eq("t_R ε_R s_L = s_L", t_r.compose(&e_r.compose(s_l)), s_l);
        mat_eq("S S^-1 = id", self.antipode.compose(&self.antipode_inv), &id);
        mat_eq("S^-1 S = id", self.antipode_inv.compose(&self.antipode), &id);
        mat_eq("t_R = S^-1 s_R", self.antipode_inv.compose(s_r), t_r);
        mat_eq("t_L ε_L t_R = S^-1 t_R", t_l.compose(&e_l.compose(t_r)), &self.antipode_inv.compose(t_r));
        mat_eq("t_L = S^-1 s_L", self.antipode_inv.compose(s_l), t_l);
        mat_eq("t_R ε_R t_L = S^-1 t_L", t_r.compose(&e_r.compose(t_l)), &self.antipode_inv.compose(t_l));
        mat_eq("ε_L t_R ε_R = ε_L S^-1", e_l.compose(&t_r.compose(e_r)), &e_l.compose(&self.antipode_inv));
        mat_eq("ε_R t_L ε_L = ε_R S^-1", e_r.compose(&t_l.compose(e_l)), &e_r.compose(&self.antipode_inv));
        mat_eq("ε_R S = ε_R s_L ε_L", e_r.compose(&self.antipode), &e_r.compose(&s_l.compose(e_l)));
        mat_eq("ε_L S = ε_L s_R ε_R", e_l.compose(&self.antipode), &e_l.compose(&s_r.compose(e_r)));

        // mixed coassociativity
        let lr = mixed_triple(hl, hr);
        let ax = r.axiom("(Δ_L ⊗_R id)Δ_R = (id ⊗_L Δ_R)Δ_L");
        for x in 0..d {
            let e = SparseVec::unit(x);
            let lhs = lr.project(&apply_kron(&[hl.delta_lift(), &id], &hr.delta(&e)));
            let rhs = lr.project(&apply_kron(&[&id, hr.delta_lift()], &hl.delta(&e)));
            ax.compare(&[x], &lhs, &rhs);
        }
        let rl = mixed_triple(hr, hl);
        let ax = r.axiom("(Δ_R ⊗_L id)Δ_L = (id ⊗_R Δ_L)Δ_R");
        for x in 0..d {
            let e = SparseVec::unit(x);
            let lhs = rl.project(&apply_kron(&[hr.delta_lift(), &id], &hl.delta(&e)));
            let rhs = rl.project(&apply_kron(&[&id, hl.delta_lift()], &hr.delta(&e)));
            ax.compare(&[x], &lhs, &rhs);
        }

        let ax = r.axiom("S(t_L(l) h t_R(r)) = s_R(r) S(h) s_L(l)");
        for l in 0..ld {
            for x in 0..d {
                for y in 0..rd {
                    let e = SparseVec::unit(x);
                    let arg = h.mul(&h.mul(t_l.col(l), &e), t_r.col(y));
                    let lhs = self.s(&arg);
                    let rhs = h.mul(&h.mul(s_r.col(y), &self.s(&e)), s_l.col(l));
                    ax.compare(&[l, x, y], &lhs, &rhs);
                }
            }
        }

        let contract = |v: &SparseVec, f: &dyn Fn(usize, usize) -> SparseVec| {
            let mut acc = Accumulator::new();
            for (idx, a) in v.iter() {
                acc.add_scaled(a, &f(idx / d, idx % d));
            }
            acc.finish()
        };
        let sc = |i: usize| self.antipode.col(i).clone();
        let sic = |i: usize| self.antipode_inv.col(i).clone();
        let u = SparseVec::unit;

        let ax = r.axiom("S(h_(1)) h_(2) = s_R ε_R(h)");
        for x in 0..d {
            let lhs = contract(&hl.delta(&u(x)), &|p, q| h.mul(&sc(p), &u(q)));
            ax.compare(&[x], &lhs, &self.eps_r_in_h(&u(x)));
        }
        let ax = r.axiom("h^(1) S(h^(2)) = s_L ε_L(h)");
        for x in 0..d {
            let lhs = contract(&hr.delta(&u(x)), &|p, q| h.mul(&u(p), &sc(q)));
            ax.compare(&[x], &lhs, &self.eps_l_in_h(&u(x)));
        }
        let ax = r.axiom("S^-1(h_(2)) h_(1) = t_R ε_R(h)");
        for x in 0..d {
            let lhs = contract(&hl.delta(&u(x)), &|p, q| h.mul(&sic(q), &u(p)));
            ax.compare(&[x], &lhs, &t_r.apply(&e_r.apply(&u(x))));
        }
        let ax = r.axiom("h^(2) S^-1(h^(1)) = t_L ε_L(h)");
        for x in 0..d {
            let lhs = contract(&hr.delta(&u(x)), &|p, q| h.mul(&u(q), &sic(p)));
            ax.compare(&[x], &lhs, &t_l.apply(&e_l.apply(&u(x))));
        }

        for (name, m) in [("S", &self.antipode), ("S^-1", &self.antipode_inv)] {
            let ax = r.axiom(format!("{name} is an anti-algebra map"));
            ax.compare(&[], &m.apply(h.unit()), h.unit());
            for x in 0..d {
                for y in 0..d {
                    let lhs = m.apply(h.basis_product(x, y));
                    let rhs = h.mul(m.col(y), m.col(x));
                    ax.compare(&[x, y], &lhs, &rhs);
                }
            }
        }

        // anti-coring: Δ_R S = (S ⊗ S) flip Δ_L and Δ_L S = (S ⊗ S) flip Δ_R
        let flip_s = |v: &SparseVec| contract(v, &|p, q| sc(q).kron(&sc(p), d));
        let ax = r.axiom("Δ_R S = (S ⊗ S) flip Δ_L");
        for x in 0..d {
            let lhs = hr.pair().project(&hr.delta(&sc(x)));
            let rhs = hr.pair().project(&flip_s(&hl.delta(&u(x))));
            ax.compare(&[x], &lhs, &rhs);
        }
        let ax = r.axiom("Δ_L S = (S ⊗ S) flip Δ_R");
        for x in 0..d {
            let lhs = hl.pair().project(&hl.delta(&sc(x)));
            let rhs = hl.pair().project(&flip_s(&hr.delta(&u(x))));
            ax.compare(&[x], &lhs, &rhs);
        }

        let (_, rep) = self.base_anti_isomorphisms();
        r.absorb(rep);
        r
    }

    /// `(ε_L s_R, ε_R t_L, ε_R s_L, ε_L t_R)`, each checked as an algebra map
    /// between the appropriate (opposite) bases, with the two inverse pairs.
    pub fn base_anti_isomorphisms(&self) -> ([AlgebraMap; 4], Report) {
        let (hl, hr) = (&self.left, &self.right);
        let (l, rb) = (hl.base(), hr.base());
        let el_sr = AlgebraMap::new(rb.opposite(), l.clone(), hl.counit().compose(hr.source()));
        let er_tl = AlgebraMap::new(l.clone(), rb.opposite(), hr.counit().compose(hl.target()));
        let er_sl = AlgebraMap::new(l.opposite(), rb.clone(), hr.counit().compose(hl.source()));
        let el_tr = AlgebraMap::new(rb.clone(), l.opposite(), hl.counit().compose(hr.target()));
        let mut r = Report::new("base anti-isomorphisms");
        for (name, f) in [
            ("ε_L s_R", &el_sr),
            ("ε_R t_L", &er_tl),
            ("ε_R s_L", &er_sl),
            ("ε_L t_R", &el_tr),
        ] {
            let mut sub = check_algebra_map(f);
            sub.subject = name.into();
            r.absorb(sub);
        }
        let pairs = [
            ("ε_L s_R ∘ ε_R t_L = id_L", el_sr.matrix.compose(&er_tl.matrix), l.dim()),
            ("ε_R t_L ∘ ε_L s_R = id_R", er_tl.matrix.compose(&el_sr.matrix), rb.dim()),
            ("ε_L t_R ∘ ε_R s_L = id_L", el_tr.matrix.compose(&er_sl.matrix), l.dim()),
            ("ε_R s_L ∘ ε_L t_R = id_R", er_sl.matrix.compose(&el_tr.matrix), rb.dim()),
        ];
        for (name, m, n) in pairs {
            let ok = m.nrows() == n && m.ncols() == n && m.is_identity();
            r.note(name, ok, "composite is not the identity");
        }
        ([el_sr, er_tl, er_sl, el_tr], r)
    }
}

/// Exact inverse of a square matrix, if it exists.
pub fn invert(m: &SparseMatrix) -> Option<SparseMatrix> {
    let n = m.ncols();
    if m.nrows() != n {
        return None;
    }
    // Row-reduce [M | I] to [I | M^-1]; the transpose stores rows of M as columns.
    let t = m.transpose();
    let rows: Vec<SparseVec> = (0..n)
        .map(|i| {
            let mut v = t.col(i).clone();
            v = v.add(&SparseVec::unit(n + i));
            v
        })
        .collect();
    let s = crate::linalg::Subspace::span(2 * n, rows.iter());
    if s.dim() != n || s.pivots().iter().any(|&p| p >= n) {
        return None;
    }
    let rows_of_inv = SparseMatrix::from_columns(n, s.basis().iter().map(|r| r.slice(n..2 * n)).collect());
    Some(rows_of_inv.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn q(a: i64) -> Scalar {
        Scalar::from_int(a)
    }

    #[test]
    fn invert_small() {
        let m = SparseMatrix::from_columns(
            2,
            vec![
                SparseVec::from_pairs([(0, q(1)), (1, q(1))]),
                SparseVec::from_pairs([(1, q(1))]),
            ],
        );
        let inv = invert(&m).unwrap();
        assert!(m.compose(&inv).is_identity());
        assert!(invert(&SparseMatrix::zero(2, 2)).is_none());
    }

    #[test]
    fn sweedler_brackets_agree_for_group_likes() {
        let h = FiniteAlgebra::group_algebra(2);
        let delta = SparseMatrix::from_columns(4, vec![SparseVec::unit(0), SparseVec::unit(3)]);
        let eps = SparseMatrix::from_columns(1, vec![SparseVec::unit(0), SparseVec::unit(0)]);
        let b = Bialgebroid::over_ground(Side::Left, h, delta, eps).unwrap();
        let g = SparseVec::unit(1);
        let three = b.sweedler_expand(&g, 3);
        assert_eq!(three, SparseVec::unit(7));
        assert_eq!(three, b.sweedler_expand_right(&g, 3));
        assert!(b.check().passed());
    }
}
