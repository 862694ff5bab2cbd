use std::sync::OnceLock;

use proptest::prelude::*;

use hopfcyc::cohomology::{dualize, CochainComplex};
use hopfcyc::cyclic::{CyclicHModule, ParaCyclicHModule, PowerPolicy};
use hopfcyc::instances::builtin;
use hopfcyc::suite::algebra_modules;
use hopfcyc::{QuotientSpace, Scalar, SparseVec, Subspace};

const NAMES: [&str; 4] = ["group2", "group3", "cm_twist", "dual_numbers"];
const N_MAX: usize = 3;

struct Fixture {
    t: ParaCyclicHModule,
    q: CyclicHModule,
    cyc: CochainComplex,
}

fn fixtures() -> &'static Vec<Fixture> {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        NAMES
            .iter()
            .map(|n| {
                let m = algebra_modules(&builtin(n).unwrap(), N_MAX, PowerPolicy::default()).unwrap();
                let (_, cyc) = dualize(&m.q).unwrap();
                Fixture { t: m.t.module, q: m.q, cyc }
            })
            .collect()
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..21, 1i64..8).prop_map(|(p, q)| Scalar::new(p, q))
}

fn vector(dim: usize) -> impl Strategy<Value = SparseVec> {
    proptest::collection::vec(scalar(), dim).prop_map(|v| SparseVec::from_dense(&v))
}

fn rows(dim: usize) -> impl Strategy<Value = Vec<SparseVec>> {
    proptest::collection::vec(vector(dim), 0..5)
}

/// A fixture index, a degree in `1..=N_MAX` and a vector of that degree of T.
fn chain_element() -> impl Strategy<Value = (usize, usize, SparseVec)> {
    (0..NAMES.len(), 1..=N_MAX).prop_flat_map(|(k, n)| {
        let d = fixtures()[k].t.dims[n];
        (Just(k), Just(n), vector(d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn span_is_canonical(vs in rows(6), c in scalar()) {
        let a = Subspace::span(6, vs.iter());
        // add a multiple of the first row to every other row and reverse the order
        let mut ws: Vec<SparseVec> = vs.clone();
        if let Some(first) = vs.first() {
            for w in ws.iter_mut().skip(1) {
                *w = w.add_scaled(&c, first);
            }
        }
        ws.reverse();
        prop_assert_eq!(a, Subspace::span(6, ws.iter()));
    }

    #[test]
    fn quotient_section_and_projection(killed in rows(5), v in vector(5)) {
        let k = Subspace::span(5, killed.iter());
        let q = QuotientSpace::new(k.clone());
        prop_assert_eq!(q.dim() + k.dim(), 5);
        for b in k.basis() {
            prop_assert!(q.project(b).is_zero());
        }
        let c = q.project(&v);
        prop_assert_eq!(q.project(&q.section(&c)), c.clone());
        prop_assert!(k.contains(&v.sub(&q.section(&c))));
    }

    #[test]
    fn simplicial_identities_on_elements((k, n, x) in chain_element()) {
        let t = &fixtures()[k].t;
        if n >= 2 {
            for j in 1..=n {
                for i in 0..j {
                    let lhs = t.face(n - 1, i).apply(&t.face(n, j).apply(&x));
                    let rhs = t.face(n - 1, j - 1).apply(&t.face(n, i).apply(&x));
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
        prop_assert_eq!(t.tau_inv[n].apply(&t.tau[n].apply(&x)), x.clone());
        for i in 1..=n {
            let lhs = t.face(n, i).apply(&t.tau[n].apply(&x));
            let rhs = t.tau[n - 1].apply(&t.face(n, i - 1).apply(&x));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn quotient_tau_has_order_n_plus_one((k, n) in (0..NAMES.len(), 0..=N_MAX), seed in vector(64)) {
        let q = &fixtures()[k].q;
        let x = seed.slice(0..q.dims[n]);
        let mut y = x.clone();
        for _ in 0..=n {
            y = q.tau[n].apply(&y);
        }
        prop_assert_eq!(y, x);
    }

    #[test]
    fn coboundary_squares_to_zero((k, n) in (0..NAMES.len(), 0..N_MAX - 1), seed in vector(64)) {
        let c = &fixtures()[k].cyc;
        let phi = seed.slice(0..c.dims[n]);
        let bb = c.differentials[n + 1].apply(&c.differentials[n].apply(&phi));
        prop_assert!(bb.is_zero());
    }

    #[test]
    fn action_commutes_with_faces((k, n, x) in chain_element(), h in 0usize..6) {
        let t = &fixtures()[k].t;
        prop_assume!(h < t.h_dim && !t.pseudo);
        for i in 0..n {
            let lhs = t.face(n, i).apply(&t.action[n][h].apply(&x));
            let rhs = t.action[n - 1][h].apply(&t.face(n, i).apply(&x));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
