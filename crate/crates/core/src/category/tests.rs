use super::*;
use crate::algebra::FiniteAlgebra;
use crate::cyclic::{
    build_qh, build_q_algebra, build_t_module_algebra, check_cyclic, check_cyclic_map, check_paracyclic, compose_graded,
    identity_map, PowerPolicy,
};
use crate::instances::{instance_ground_with_algebra, instance_group, instance_group2_twisted, instance_trivial, InstanceBundle};
use crate::linalg::rank;
use crate::modules::Orientation;
use crate::modules::StableModuleComodule;

fn left_alg(b: &InstanceBundle) -> &ModuleAlgebra {
    b.left_algebra.as_ref().unwrap()
}

fn left_coeffs(b: &InstanceBundle) -> &StableModuleComodule {
    b.left_coeffs.as_ref().unwrap()
}

/// `tr(M^k)` for a small integer matrix, by repeated multiplication.
fn trace_power(m: &[Vec<u64>], k: usize) -> u64 {
    let n = m.len();
    let mut p: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    for _ in 0..k {
        p = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|l| p[i][l] * m[l][j]).sum()).collect())
            .collect();
    }
    (0..n).map(|i| p[i][i]).sum()
}

#[test]
fn star_of_group2_has_two_dimensional_endomorphisms() {
    let b = instance_group(2);
    let c = build_star(&b.hopf, left_alg(&b)).unwrap();
    assert_eq!(c.hom_dim(0, 0), 2);
    assert!(check_hcategory(&b.hopf, &c).passed());
}

#[test]
fn free_category_dims_and_nerve_sizes() {
    let b = instance_group(2);
    let c = build_free_cat(&b.hopf, left_alg(&b), 2).unwrap();
    let dims: Vec<Vec<u64>> = (0..2).map(|x| (0..2).map(|y| c.hom_dim(x, y) as u64).collect()).collect();
    assert_eq!(dims, vec![vec![2, 4], vec![4, 8]]);
    assert!(check_hcategory(&b.hopf, &c).passed());
    let t = build_t_category(&b.hopf, &c, left_coeffs(&b), 2).unwrap();
    for n in 0..=2 {
        assert_eq!(t.module.dims[n] as u64, trace_power(&dims, n + 1));
    }
    assert_eq!(trace_power(&dims, 3), 1000);
}

#[test]
fn ls_is_an_hcategory_and_perturbation_is_caught() {
    let b = instance_group(2);
    let mut ls = build_ls(&b.hopf).unwrap();
    assert!(check_hcategory(&b.hopf, &ls).passed());
    ls.compose[0][1][0][0] = SparseVec::unit(0).scaled(&crate::Scalar::from_int(2));
    let r = check_hcategory(&b.hopf, &ls);
    assert!(r.has_failure("associativity of composition"), "{r}");
}

#[test]
fn free_witness_separates_and_defects_are_named() {
    let b = instance_group(2);
    let h = &b.hopf;
    let c = build_free_cat(h, left_alg(&b), 2).unwrap();
    let w = free_witness(&c).unwrap();
    assert!(check_separated(h, &c, &[0], &w).passed());

    let mut zeroed = w.clone();
    zeroed.pieces[1][0].2 = SparseVec::new();
    assert!(check_separated(h, &c, &[0], &zeroed).has_failure("Σ v_i u_i = id"));

    // multiplying by e_0 in A is A-linear but not invariant under the shift
    let e0 = c.coordinates_of(0, 0, &b.left_algebra.as_ref().unwrap().algebra.left_mul_matrix(&SparseVec::unit(0))).unwrap();
    assert!(!is_invariant(h, &c, 0, 0, &e0));
    let mut skewed = w.clone();
    skewed.pieces[0][0].1 = e0;
    assert!(check_separated(h, &c, &[0], &skewed).has_failure("u_i, v_i are H-invariant"));
}

#[test]
fn ccls_counts_cycles_and_is_cyclic() {
    let b = instance_group(2);
    let cc = build_ccls(&b.hopf, 4).unwrap();
    for n in 0..=4 {
        assert_eq!(cc.module.dims[n], 1 << (n + 1));
    }
    assert!(check_cyclic(&cc.module).passed());
    let q = build_q_category(&b.hopf, &cc, PowerPolicy::default()).unwrap();
    assert_eq!(q.dims, cc.module.dims);
}

#[test]
fn category_nerves_are_pseudo_paracyclic() {
    for b in [instance_group(2), instance_group2_twisted(), instance_group(3)] {
        let c = build_free_cat(&b.hopf, left_alg(&b), if b.name == "group3" { 1 } else { 2 }).unwrap();
        let t = build_t_category(&b.hopf, &c, left_coeffs(&b), 2).unwrap();
        let r = check_paracyclic(&t.module);
        assert!(r.passed(), "{}:\n{r}", b.name);
    }
}

#[test]
fn right_right_coefficients_are_rejected() {
    let b = instance_group(2);
    let c = build_star(&b.hopf, left_alg(&b)).unwrap();
    let m = StableModuleComodule::trivial(&b.hopf, Orientation::Right);
    assert!(build_t_category(&b.hopf, &c, &m, 1).is_err());
}

#[test]
fn identity_functor_induces_identity() {
    let b = instance_group(2);
    let c = build_free_cat(&b.hopf, left_alg(&b), 2).unwrap();
    let t = build_t_category(&b.hopf, &c, left_coeffs(&b), 2).unwrap();
    let q = build_q_category(&b.hopf, &t, PowerPolicy::default()).unwrap();
    assert!(check_cyclic(&q).passed());
    let f = induced_chain_map(&HFunctor::identity(&c), &t, &q, &t, &q).unwrap();
    assert_eq!(f, identity_map(&q));
}

#[test]
fn one_object_comparison_is_a_cyclic_isomorphism() {
    let cases = [
        instance_trivial(),
        instance_group(2),
        instance_group(3),
        instance_ground_with_algebra("product2", FiniteAlgebra::product(2)),
        instance_ground_with_algebra("dual_numbers", FiniteAlgebra::truncated_polynomial(2)),
    ];
    for b in cases {
        let h = &b.hopf;
        let star = build_star(h, left_alg(&b)).unwrap();
        let ts = build_t_category(h, &star, left_coeffs(&b), 3).unwrap();
        let qs = build_q_category(h, &ts, PowerPolicy::default()).unwrap();
        let alg = build_t_module_algebra(h, b.right_algebra.as_ref().unwrap(), b.right_coeffs.as_ref().unwrap(), 3).unwrap();
        let (qh, _) = build_qh(&alg.module, PowerPolicy::default()).unwrap();
        let qa = build_q_algebra(&qh, h).unwrap();
        let f = oneobj_iso(&ts, &qs, &alg, &qa).unwrap();
        let r = check_cyclic_map(&f, &qs, &qa);
        assert!(r.passed(), "{}:\n{r}", b.name);
        for (n, m) in f.iter().enumerate() {
            assert_eq!(qs.dims[n], qa.dims[n], "{} degree {n}", b.name);
            assert_eq!(rank(m), qa.dims[n], "{} degree {n}", b.name);
        }
    }
}

#[test]
fn relabeling_gives_a_special_homotopy() {
    let b = instance_group(2);
    let h = &b.hopf;
    let c = build_free_cat(h, left_alg(&b), 2).unwrap();
    let t = build_t_category(h, &c, left_coeffs(&b), 2).unwrap();
    let q = build_q_category(h, &t, PowerPolicy::default()).unwrap();
    let (g, eta) = relabeling(&c).unwrap();
    assert!(check_functor(h, &c, &c, &g).passed());
    let cc = build_ccls(h, 2).unwrap();
    let hom = special_homotopy_from_nat_iso(h, &t, &q, &t, &q, &HFunctor::identity(&c), &g, &eta, &cc).unwrap();
    assert!(hom.report.passed(), "{}", hom.report);
}

#[test]
fn broken_naturality_is_refused() {
    let b = instance_group(2);
    let h = &b.hopf;
    let c = build_free_cat(h, left_alg(&b), 2).unwrap();
    let t = build_t_category(h, &c, left_coeffs(&b), 1).unwrap();
    let q = build_q_category(h, &t, PowerPolicy::default()).unwrap();
    let (g, mut eta) = relabeling(&c).unwrap();
    eta.components[1] = c.identity[1].clone();
    eta.inverses[1] = c.identity[1].clone();
    let cc = build_ccls(h, 1).unwrap();
    let err = special_homotopy_from_nat_iso(h, &t, &q, &t, &q, &HFunctor::identity(&c), &g, &eta, &cc).unwrap_err();
    assert!(matches!(err, crate::Error::Naturality(_)));
}

#[test]
fn separation_retraction_splits_the_inclusion() {
    let b = instance_group(2);
    let h = &b.hopf;
    let c = build_free_cat(h, left_alg(&b), 2).unwrap();
    let t = build_t_category(h, &c, left_coeffs(&b), 2).unwrap();
    let q = build_q_category(h, &t, PowerPolicy::default()).unwrap();
    let w = free_witness(&c).unwrap();
    let cc = build_ccls(h, 2).unwrap();
    let ret = separation_retraction(h, &t, &q, &[0], &w, &cc, PowerPolicy::default()).unwrap();
    assert!(ret.homotopy.report.passed(), "{}", ret.homotopy.report);
    assert_eq!(compose_graded(&ret.e, &ret.inclusion), identity_map(&ret.q_sub));
    assert!(check_cyclic_map(&ret.e, &q, &ret.q_sub).passed());
}
