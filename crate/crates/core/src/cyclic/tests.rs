use super::*;
use crate::algebra::FiniteAlgebra;
use crate::instances::{
    instance_cm_twist, instance_ground_with_algebra, instance_group, instance_group2_twisted, instance_trivial,
    unstable_coefficients, InstanceBundle,
};

fn nerve(b: &InstanceBundle, n_max: usize) -> AlgebraNerve {
    build_t_module_algebra(&b.hopf, b.right_algebra.as_ref().unwrap(), b.right_coeffs.as_ref().unwrap(), n_max).unwrap()
}

fn q_of(b: &InstanceBundle, n_max: usize) -> CyclicHModule {
    let t = nerve(b, n_max).module;
    let (qh, _) = build_qh(&t, PowerPolicy::default()).unwrap();
    build_q_algebra(&qh, &b.hopf).unwrap()
}

/// `swap^{⊗ k}` on `(ℚ²)^{⊗ k}`, computed from bit flips.
fn swap_tensor(k: usize) -> SparseMatrix {
    let n = 1usize << k;
    SparseMatrix::from_columns(n, (0..n).map(|i| SparseVec::unit(!i & (n - 1))).collect())
}

#[test]
fn ground_case_is_one_dimensional_with_identities() {
    let t = nerve(&instance_trivial(), 3).module;
    for n in 0..=3 {
        assert_eq!(t.dims[n], 1);
        assert!(t.tau[n].is_identity());
        for f in &t.faces[n] {
            assert!(f.is_identity());
        }
    }
}

#[test]
fn product_algebra_dims_and_first_face() {
    let t = nerve(&instance_ground_with_algebra("p", FiniteAlgebra::product(2)), 3).module;
    for n in 0..=3 {
        assert_eq!(t.dims[n], 1 << (n + 1));
    }
    // d_0(e_i ⊗ e_j ⊗ e_k) = δ_ij e_i ⊗ e_k, basis index 4i + 2j + k
    let d0 = &t.faces[2][0];
    for idx in 0..8 {
        let (i, j, k) = (idx >> 2, (idx >> 1) & 1, idx & 1);
        let expected = if i == j { SparseVec::unit(2 * i + k) } else { SparseVec::new() };
        assert_eq!(d0.col(idx), &expected);
    }
}

#[test]
fn group2_tau_has_order_two_in_degree_one() {
    let t = nerve(&instance_group(2), 2).module;
    assert!(t.tau[1].pow(2).is_identity());
    assert_eq!(tau_inverse(&t, 1), t.tau[1]);
    // e_i ⊗ e_j ↦ e_j ⊗ e_i
    for idx in 0..4 {
        assert_eq!(t.tau[1].col(idx), &SparseVec::unit((idx % 2) * 2 + idx / 2));
    }
}

#[test]
fn built_nerves_are_paracyclic() {
    for b in [instance_group(2), instance_group(3), instance_cm_twist(), instance_group2_twisted()] {
        let t = nerve(&b, 3).module;
        let r = check_paracyclic(&t);
        assert!(r.passed(), "{}:\n{r}", b.name);
    }
}

#[test]
fn zeroed_face_is_named() {
    let mut t = nerve(&instance_group(2), 3).module;
    t.faces[2][1] = SparseMatrix::zero(t.dims[1], t.dims[2]);
    let r = check_paracyclic(&t);
    assert!(r.has_failure("d_i d_j = d_{j-1} d_i (i < j)"));
    assert!(r.has_failure("d_j s_j = d_{j+1} s_j = id"));
}

#[test]
fn twisted_coaction_gives_swap_as_tau_power() {
    let t = nerve(&instance_group2_twisted(), 3).module;
    for n in 0..=3 {
        assert_eq!(t.tau[n].pow(n + 1), swap_tensor(n + 1));
    }
    assert!(!check_cyclic(&t).passed());
}

#[test]
fn unstable_control_breaks_tau_order() {
    let mut b = instance_group(2);
    b.right_coeffs = Some(unstable_coefficients(&b.hopf));
    let t = nerve(&b, 2).module;
    assert!(check_cyclic(&t).has_failure("τ^{n+1} = id"));
}

#[test]
fn commutators_vanish_for_group_instances() {
    let t = nerve(&instance_group(2), 3).module;
    let (qh, info) = build_qh(&t, PowerPolicy::default()).unwrap();
    assert_eq!(qh.dims, t.dims);
    for (n, i) in info.iter().enumerate() {
        assert_eq!(i.tau_order, Some(n + 1));
        assert!(i.exact);
        assert_eq!(i.killed_dim, 0);
    }
}

#[test]
fn q_dims_are_half_of_t() {
    // swap^⊗ has no fixed basis tensors, so its ±1 eigenspaces each
    // have half the dimension
    for b in [instance_group(2), instance_cm_twist(), instance_group2_twisted()] {
        let q = q_of(&b, 4);
        for n in 0..=4 {
            assert_eq!(q.dims[n], 1 << n, "{} degree {n}", b.name);
        }
        let r = check_cyclic(&q);
        assert!(r.passed(), "{}:\n{r}", b.name);
    }
}

#[test]
fn cm_twist_q_is_antiinvariant() {
    let b = instance_cm_twist();
    let q = q_of(&b, 3);
    for n in 0..=3 {
        let s = swap_tensor(n + 1);
        for k in 0..q.dims[n] {
            let v = q.presentation[n].lift(&SparseVec::unit(k));
            assert_eq!(s.apply(&v), v.neg());
        }
    }
}

#[test]
fn ground_hopf_gives_c_equal_to_q() {
    let b = instance_ground_with_algebra("dn", FiniteAlgebra::truncated_polynomial(2));
    let q = q_of(&b, 3);
    let c = build_hopf_cyclic(&q, &b.hopf).unwrap();
    assert_eq!(c.dims, q.dims);
    for n in 1..=3 {
        assert_eq!(c.faces[n], q.faces[n]);
    }
    assert!(check_cyclic(&c).passed());
}

#[test]
fn group2_c_is_cyclic() {
    let b = instance_group(2);
    let c = build_hopf_cyclic(&q_of(&b, 3), &b.hopf).unwrap();
    // h·1 = ε(h), so the coinvariant quotient of the invariants is everything
    for n in 0..=3 {
        assert_eq!(c.dims[n], 1 << n);
    }
    assert!(check_cyclic(&c).passed());
}

#[test]
fn intersection_variant_agrees_when_commutators_vanish() {
    let t = nerve(&instance_group(2), 2).module;
    let policy = PowerPolicy {
        variant: QuotientVariant::Intersection,
        ..PowerPolicy::default()
    };
    let (qh, _) = build_qh(&t, policy).unwrap();
    assert_eq!(qh.dims, t.dims);
}

#[test]
fn tensor_dims_multiply_and_unit_is_neutral() {
    let t = nerve(&instance_group(2), 2).module;
    let one = nerve(&instance_trivial(), 2).module;
    let p = tensor_product(&t, &one);
    assert_eq!(p.dims, t.dims);
    assert_eq!(p.tau, t.tau);
    let sq = tensor_product(&t, &t);
    for n in 0..=2 {
        assert_eq!(sq.dims[n], t.dims[n] * t.dims[n]);
    }
    assert!(check_paracyclic(&sq).passed());
}

#[test]
fn identity_is_a_cyclic_map() {
    let q = q_of(&instance_group(2), 3);
    assert!(check_cyclic_map(&identity_map(&q), &q, &q).passed());
}

#[test]
fn non_commuting_map_fails() {
    let q = q_of(&instance_group(2), 2);
    let mut f = identity_map(&q);
    f[1] = f[1].scaled(&Scalar::from_int(2));
    assert!(check_semicyclic_map(&f, &q, &q).has_failure("f d_i = d_i f"));
}
