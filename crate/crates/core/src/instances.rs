//! Built-in example instances.

use crate::algebra::FiniteAlgebra;
use crate::error::Result;
use crate::hopf::{Bialgebroid, HopfAlgebroid, Side};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::modules::{
    check_comodule, check_module_algebra, check_stability, HModule, ModuleAlgebra, Orientation,
    StableModuleComodule,
};
use crate::report::Report;
use crate::scalar::Scalar;

/// A Hopf algebroid together with optional module-algebra and coefficient
/// data in both orientations.
#[derive(Clone, Debug)]
pub struct InstanceBundle {
    pub name: String,
    pub hopf: HopfAlgebroid,
    /// Right module algebra, for the algebra-level cyclic modules.
    pub right_algebra: Option<ModuleAlgebra>,
    /// Left module algebra, for H-categories of equivariant modules.
    pub left_algebra: Option<ModuleAlgebra>,
    /// Stable right-right coefficients.
    pub right_coeffs: Option<StableModuleComodule>,
    /// Stable left-left coefficients.
    pub left_coeffs: Option<StableModuleComodule>,
}

impl InstanceBundle {
    /// Every validator that applies to the bundle's components.
    pub fn validate(&self) -> Report {
        let mut r = Report::new(format!("instance {}", self.name));
        r.absorb(self.hopf.check());
        let h = &self.hopf;
        for ma in [&self.right_algebra, &self.left_algebra].into_iter().flatten() {
            r.absorb(check_module_algebra(h, ma));
        }
        for m in [&self.right_coeffs, &self.left_coeffs].into_iter().flatten() {
            let mut c = check_comodule(h, &m.comodule);
            c.subject = format!("{} coefficients: {}", orientation_name(m.orientation()), c.subject);
            r.absorb(c);
            let mut s = check_stability(h, m);
            s.subject = format!("{} coefficients: {}", orientation_name(m.orientation()), s.subject);
            r.absorb(s);
        }
        r
    }
}

fn orientation_name(o: Orientation) -> &'static str {
    match o {
        Orientation::Right => "right-right",
        Orientation::Left => "left-left",
    }
}

pub const BUILTIN_NAMES: [&str; 8] = [
    "trivial",
    "group2",
    "group3",
    "enveloping",
    "cm_twist",
    "product2",
    "dual_numbers",
    "group2_twisted",
];

pub fn builtin(name: &str) -> Option<InstanceBundle> {
    Some(match name {
        "trivial" => instance_trivial(),
        "group2" => instance_group(2),
        "group3" => instance_group(3),
        "enveloping" => instance_enveloping(),
        "cm_twist" => instance_cm_twist(),
        "product2" => instance_ground_with_algebra("product2", FiniteAlgebra::product(2)),
        "dual_numbers" => instance_ground_with_algebra("dual_numbers", FiniteAlgebra::truncated_polynomial(2)),
        "group2_twisted" => instance_group2_twisted(),
        _ => return None,
    })
}

fn q(a: i64) -> Scalar {
    Scalar::from_int(a)
}

fn permutation(n: usize, f: impl Fn(usize) -> usize) -> SparseMatrix {
    SparseMatrix::from_columns(n, (0..n).map(|i| SparseVec::unit(f(i))).collect())
}

/// ℚ as a Hopf algebra.
pub fn ground_hopf() -> HopfAlgebroid {
    let one = SparseMatrix::identity(1);
    HopfAlgebroid::from_hopf_algebra(FiniteAlgebra::ground(), one.clone(), one.clone(), one)
        .expect("ground Hopf algebra is well-formed")
}

/// ℚ[ℤ/n] with group-like basis.
pub fn group_hopf(n: usize) -> HopfAlgebroid {
    let delta = SparseMatrix::from_columns(n * n, (0..n).map(|i| SparseVec::unit(i * n + i)).collect());
    let eps = SparseMatrix::from_columns(1, vec![SparseVec::unit(0); n]);
    let s = permutation(n, |i| (n - i) % n);
    HopfAlgebroid::from_hopf_algebra(FiniteAlgebra::group_algebra(n), delta, eps, s)
        .expect("group Hopf algebra is well-formed")
}

/// A over the ground Hopf algebra, with trivial coefficients.
pub fn instance_ground_with_algebra(name: &str, a: FiniteAlgebra) -> InstanceBundle {
    let h = ground_hopf();
    let n = a.dim();
    let trivial_action = |side| HModule::new(side, n, vec![SparseMatrix::identity(n)]);
    InstanceBundle {
        name: name.into(),
        right_algebra: Some(ModuleAlgebra {
            algebra: a.clone(),
            module: trivial_action(Side::Right),
        }),
        left_algebra: Some(ModuleAlgebra {
            algebra: a,
            module: trivial_action(Side::Left),
        }),
        right_coeffs: Some(StableModuleComodule::trivial(&h, Orientation::Right)),
        left_coeffs: Some(StableModuleComodule::trivial(&h, Orientation::Left)),
        hopf: h,
    }
}

/// H = A = M = ℚ.
pub fn instance_trivial() -> InstanceBundle {
    instance_ground_with_algebra("trivial", FiniteAlgebra::ground())
}

/// ℚ[ℤ/n] acting on ℚ^n by cyclic shift of coordinates; trivial coefficients.
pub fn instance_group(n: usize) -> InstanceBundle {
    let h = group_hopf(n);
    let a = FiniteAlgebra::product(n);
    // g^k ▷ e_i = e_{i+k}; the right action is e_i ◁ g^k = S(g^k) ▷ e_i.
    let left = (0..n).map(|k| permutation(n, move |i| (i + k) % n)).collect();
    let right = (0..n).map(|k| permutation(n, move |i| (i + n - k) % n)).collect();
    InstanceBundle {
        name: format!("group{n}"),
        right_algebra: Some(ModuleAlgebra {
            algebra: a.clone(),
            module: HModule::new(Side::Right, n, right),
        }),
        left_algebra: Some(ModuleAlgebra {
            algebra: a,
            module: HModule::new(Side::Left, n, left),
        }),
        right_coeffs: Some(StableModuleComodule::trivial(&h, Orientation::Right)),
        left_coeffs: Some(StableModuleComodule::trivial(&h, Orientation::Left)),
        hopf: h,
    }
}

/// `group(2)` with coefficients ℚ_g: counit action, coaction `m ↦ m ⊗ g`.
/// The cyclic operator on the algebra-level module has order 2(n+1).
pub fn instance_group2_twisted() -> InstanceBundle {
    let mut b = instance_group(2);
    b.name = "group2_twisted".into();
    let h = &b.hopf;
    let rho = SparseMatrix::from_columns(2, vec![SparseVec::unit(1)]);
    let mut m = StableModuleComodule::trivial(h, Orientation::Right);
    m.comodule.rho_l = rho.clone();
    m.comodule.rho_r = rho;
    b.right_coeffs = Some(m);
    let rho = SparseMatrix::from_columns(2, vec![SparseVec::unit(1)]);
    let mut m = StableModuleComodule::trivial(h, Orientation::Left);
    m.comodule.rho_l = rho.clone();
    m.comodule.rho_r = rho;
    b.left_coeffs = Some(m);
    b
}

/// Coefficients ℚ with coaction `m ↦ 2 m ⊗ 1`: a comodule only up to scale and
/// not stable. Used as a negative control.
pub fn unstable_coefficients(h: &HopfAlgebroid) -> StableModuleComodule {
    let mut m = StableModuleComodule::trivial(h, Orientation::Right);
    m.comodule.rho_l = m.comodule.rho_l.scaled(&q(2));
    m.comodule.rho_r = m.comodule.rho_r.scaled(&q(2));
    m
}

/// The enveloping Hopf algebroid `L ⊗ L^op` of `L = ℚ × ℚ`, with the flip antipode.
pub fn enveloping_hopf() -> HopfAlgebroid {
    let l = FiniteAlgebra::product(2);
    let h = l.tensor(&l.opposite());
    // basis p_i ⊗ p_j at index 2i + j
    let idx = |i: usize, j: usize| 2 * i + j;
    let one_l = |i: usize| SparseVec::from_pairs((0..2).map(|j| (idx(i, j), q(1))));
    let one_r = |j: usize| SparseVec::from_pairs((0..2).map(|i| (idx(i, j), q(1))));
    let left_factor = SparseMatrix::from_columns(4, (0..2).map(one_l).collect());
    let right_factor = SparseMatrix::from_columns(4, (0..2).map(one_r).collect());
    // Δ(p_i ⊗ p_j) = (p_i ⊗ 1) ⊗ (1 ⊗ p_j)
    let delta = SparseMatrix::from_columns(
        16,
        (0..4)
            .map(|x| {
                let (i, j) = (x / 2, x % 2);
                one_l(i).kron(&one_r(j), 4)
            })
            .collect(),
    );
    // ε(p_i ⊗ p_j) = p_i p_j
    let eps = SparseMatrix::from_columns(
        2,
        (0..4)
            .map(|x| if x / 2 == x % 2 { SparseVec::unit(x / 2) } else { SparseVec::new() })
            .collect(),
    );
    let left = Bialgebroid::new(
        Side::Left,
        h.clone(),
        l.clone(),
        left_factor.clone(),
        right_factor.clone(),
        delta.clone(),
        eps.clone(),
    )
    .expect("enveloping left structure");
    let right = Bialgebroid::new(Side::Right, h, l.opposite(), right_factor, left_factor, delta, eps)
        .expect("enveloping right structure");
    let flip = permutation(4, |x| idx(x % 2, x / 2));
    HopfAlgebroid::new(left, right, flip.clone(), Some(flip)).expect("enveloping Hopf algebroid")
}

pub fn instance_enveloping() -> InstanceBundle {
    InstanceBundle {
        name: "enveloping".into(),
        hopf: enveloping_hopf(),
        right_algebra: None,
        left_algebra: None,
        right_coeffs: None,
        left_coeffs: None,
    }
}

/// ℚ[ℤ/2] with the character δ(g) = -1: the left structure is the group
/// Hopf algebra, the right one has `Δ_R(g) = -g ⊗ g`, `ε_R = δ`, and the
/// antipode is `S(g) = -g`.
pub fn cm_twist_hopf() -> HopfAlgebroid {
    let h = FiniteAlgebra::group_algebra(2);
    let delta_l = SparseMatrix::from_columns(4, vec![SparseVec::unit(0), SparseVec::unit(3)]);
    let eps_l = SparseMatrix::from_columns(1, vec![SparseVec::unit(0), SparseVec::unit(0)]);
    let delta_r = SparseMatrix::from_columns(4, vec![SparseVec::unit(0), SparseVec::single(3, q(-1))]);
    let eps_r = SparseMatrix::from_columns(1, vec![SparseVec::unit(0), SparseVec::single(0, q(-1))]);
    let s = SparseMatrix::from_columns(2, vec![SparseVec::unit(0), SparseVec::single(1, q(-1))]);
    let left = Bialgebroid::over_ground(Side::Left, h.clone(), delta_l, eps_l).expect("cm_twist left");
    let right = Bialgebroid::over_ground(Side::Right, h, delta_r, eps_r).expect("cm_twist right");
    HopfAlgebroid::new(left, right, s.clone(), Some(s)).expect("cm_twist Hopf algebroid")
}

/// `cm_twist` acting on ℚ × ℚ by `a ◁ g = -swap(a)` (on the left, by swap),
/// with ℚ coefficients carrying the left counit action.
pub fn instance_cm_twist() -> InstanceBundle {
    let h = cm_twist_hopf();
    let a = FiniteAlgebra::product(2);
    let swap = permutation(2, |i| 1 - i);
    let right = vec![SparseMatrix::identity(2), swap.scaled(&q(-1))];
    let left = vec![SparseMatrix::identity(2), swap];
    let counit_l = |side| HModule::new(side, 1, vec![SparseMatrix::identity(1), SparseMatrix::identity(1)]);
    let mut rc = StableModuleComodule::trivial(&h, Orientation::Right);
    rc.module = counit_l(Side::Right);
    let lc = StableModuleComodule::trivial(&h, Orientation::Left);
    InstanceBundle {
        name: "cm_twist".into(),
        right_algebra: Some(ModuleAlgebra {
            algebra: a.clone(),
            module: HModule::new(Side::Right, 2, right),
        }),
        left_algebra: Some(ModuleAlgebra {
            algebra: a,
            module: HModule::new(Side::Left, 2, left),
        }),
        right_coeffs: Some(rc),
        left_coeffs: Some(lc),
        hopf: h,
    }
}

/// All builtins, each validated.
pub fn all_builtins() -> Result<Vec<InstanceBundle>> {
    Ok(BUILTIN_NAMES.iter().filter_map(|n| builtin(n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_validates() {
        for name in BUILTIN_NAMES {
            let b = builtin(name).unwrap();
            let r = b.validate();
            assert!(r.passed(), "{name}:\n{r}");
        }
    }

    #[test]
    fn cm_twist_has_distinct_counits() {
        let h = cm_twist_hopf();
        assert_ne!(h.left.counit(), h.right.counit());
        assert_eq!(h.right.counit().get(0, 1), q(-1));
    }

    #[test]
    fn unstable_control_fails_stability() {
        let h = group_hopf(2);
        assert!(!check_stability(&h, &unstable_coefficients(&h)).passed());
    }
}
