use super::*;
use crate::cyclic::{build_hopf_cyclic, build_q_algebra, build_qh, build_t_module_algebra, identity_map, PowerPolicy};
use crate::instances::{instance_ground_with_algebra, instance_group2_twisted};

// Generated by `classical_cyclic_oracle` with n_max = 5 and frozen.
const DUAL_NUMBERS_HH: [usize; 5] = [2, 1, 1, 1, 1];
const DUAL_NUMBERS_HC: [usize; 5] = [2, 0, 2, 0, 2];

fn reports(x: &CyclicHModule) -> (CohomologyReport, CohomologyReport) {
    let (full, cyc) = dualize(x).unwrap();
    (cohomology(&full).unwrap(), cohomology(&cyc).unwrap())
}

fn hopf_side(a: FiniteAlgebra, n_max: usize) -> CyclicHModule {
    let b = instance_ground_with_algebra("a", a);
    let t = build_t_module_algebra(&b.hopf, b.right_algebra.as_ref().unwrap(), b.right_coeffs.as_ref().unwrap(), n_max).unwrap();
    let (qh, _) = build_qh(&t.module, PowerPolicy::default()).unwrap();
    let q = build_q_algebra(&qh, &b.hopf).unwrap();
    build_hopf_cyclic(&q, &b.hopf).unwrap()
}

#[test]
fn ground_field_differentials_alternate() {
    let x = classical_cyclic_oracle(&FiniteAlgebra::ground(), 4);
    let (full, _) = dualize(&x).unwrap();
    for (n, b) in full.differentials.iter().enumerate() {
        assert_eq!(b.is_zero(), n % 2 == 0, "degree {n}");
        if n % 2 == 1 {
            assert!(b.is_identity());
        }
    }
}

#[test]
fn ground_field_cyclic_complex() {
    let x = classical_cyclic_oracle(&FiniteAlgebra::ground(), 4);
    let (_, cyc) = dualize(&x).unwrap();
    assert_eq!(cyc.dims, vec![1, 0, 1, 0, 1]);
    assert!(cyc.differentials.iter().all(SparseMatrix::is_zero));
    let (hh, hc) = reports(&x);
    assert_eq!(hc.reliable_betti(), vec![1, 0, 1, 0]);
    assert_eq!(hh.reliable_betti(), vec![1, 0, 0, 0]);
    assert!(!hc.rows[4].reliable);
}

#[test]
fn zero_differentials_give_dims() {
    let c = CochainComplex {
        dims: vec![3, 2, 5],
        differentials: vec![SparseMatrix::zero(2, 3), SparseMatrix::zero(5, 2)],
        embedding: None,
    };
    assert_eq!(cohomology(&c).unwrap().betti(), vec![3, 2, 5]);
}

#[test]
fn nonzero_square_is_rejected() {
    let id = SparseMatrix::identity(1);
    let c = CochainComplex {
        dims: vec![1, 1, 1],
        differentials: vec![id.clone(), id],
        embedding: None,
    };
    assert_eq!(cohomology(&c).unwrap_err(), Error::B2 { degree: 0 });
}

#[test]
fn paracyclic_input_is_rejected() {
    let b = instance_group2_twisted();
    let t = build_t_module_algebra(&b.hopf, b.right_algebra.as_ref().unwrap(), b.right_coeffs.as_ref().unwrap(), 2).unwrap();
    assert!(matches!(dualize(&t.module), Err(Error::Cyclicity { .. })));
}

#[test]
fn product_algebra_oracle() {
    let x = classical_cyclic_oracle(&FiniteAlgebra::product(2), 3);
    for n in 0..=3 {
        assert_eq!(x.dims[n], 1 << (n + 1));
    }
    let (hh, _) = reports(&x);
    assert_eq!(hh.rows[0].betti, 2);
}

#[test]
fn oracle_is_cyclic() {
    for a in [FiniteAlgebra::product(2), FiniteAlgebra::truncated_polynomial(2), FiniteAlgebra::matrix_algebra(2)] {
        let x = classical_cyclic_oracle(&a, 3);
        let r = crate::cyclic::check_cyclic(&x);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn dual_numbers_golden() {
    let (hh, hc) = reports(&classical_cyclic_oracle(&FiniteAlgebra::truncated_polynomial(2), 5));
    assert_eq!(hh.reliable_betti(), DUAL_NUMBERS_HH);
    assert_eq!(hc.reliable_betti(), DUAL_NUMBERS_HC);
}

#[test]
fn ground_hopf_side_matches_oracle_matrices() {
    for a in [FiniteAlgebra::product(2), FiniteAlgebra::truncated_polynomial(2)] {
        let c = hopf_side(a.clone(), 3);
        let o = classical_cyclic_oracle(&a, 3);
        assert_eq!(c.dims, o.dims);
        assert_eq!(c.faces, o.faces);
        assert_eq!(c.tau, o.tau);
        assert_eq!(c.degeneracies, o.degeneracies);
    }
}

#[test]
fn identity_induces_identity() {
    let x = classical_cyclic_oracle(&FiniteAlgebra::truncated_polynomial(2), 3);
    let (full, cyc) = dualize(&x).unwrap();
    for c in [&full, &cyc] {
        let m = induced_cohomology_map(&identity_map(&x), c, c).unwrap();
        for (n, a) in m.iter().enumerate() {
            assert!(a.is_identity(), "degree {n}");
        }
    }
}

#[test]
fn non_chain_map_is_rejected() {
    let src = CochainComplex {
        dims: vec![1, 1],
        differentials: vec![SparseMatrix::identity(1)],
        embedding: None,
    };
    let dst = CochainComplex {
        dims: vec![1, 1],
        differentials: vec![SparseMatrix::zero(1, 1)],
        embedding: None,
    };
    let f = vec![SparseMatrix::identity(1), SparseMatrix::identity(1)];
    let err = induced_cohomology_map(&f, &src, &dst).unwrap_err();
    assert!(matches!(err, Error::Commutation(_)), "{err:?}");
}
