use criterion::{black_box, criterion_group, criterion_main, Criterion};

use hopfcyc::category::{build_q_category, build_t_category};
use hopfcyc::cohomology::{cohomology, dualize};
use hopfcyc::cyclic::{build_qh, build_t_module_algebra, hochschild_boundary, PowerPolicy};
use hopfcyc::linalg::rank;
use hopfcyc::suite::algebra_modules;
use hopfcyc_bench::{free_category, group};

fn t_module_algebra(c: &mut Criterion) {
    let b = group(3);
    let (a, m) = (b.right_algebra.as_ref().unwrap(), b.right_coeffs.as_ref().unwrap());
    c.bench_function("T(A,M) group3 n=4", |bench| {
        bench.iter(|| build_t_module_algebra(&b.hopf, black_box(a), m, 4).unwrap())
    });
}

fn quotient(c: &mut Criterion) {
    let b = group(3);
    let t = build_t_module_algebra(&b.hopf, b.right_algebra.as_ref().unwrap(), b.right_coeffs.as_ref().unwrap(), 4).unwrap();
    c.bench_function("Q^H group3 n=4", |bench| {
        bench.iter(|| build_qh(black_box(&t.module), PowerPolicy::default()).unwrap())
    });
}

fn free_category_nerve(c: &mut Criterion) {
    let (b, cat) = free_category(2, 2);
    let m = b.left_coeffs.as_ref().unwrap();
    let mut g = c.benchmark_group("free category");
    g.sample_size(10);
    g.bench_function("T(F,M) n=2", |bench| bench.iter(|| build_t_category(&b.hopf, black_box(&cat), m, 2).unwrap()));
    let t = build_t_category(&b.hopf, &cat, m, 2).unwrap();
    g.bench_function("Q(F,M) n=2", |bench| {
        bench.iter(|| build_q_category(&b.hopf, black_box(&t), PowerPolicy::default()).unwrap())
    });
    g.finish();
}

fn cohomology_ranks(c: &mut Criterion) {
    let mods = algebra_modules(&group(2), 4, PowerPolicy::default()).unwrap();
    let b4 = hochschild_boundary(&mods.t.module, 4);
    c.bench_function("rank b_4 on T(A,M) group2", |bench| bench.iter(|| rank(black_box(&b4))));
    c.bench_function("HC of C(A,M) group2 n=4", |bench| {
        bench.iter(|| {
            let (_, cyc) = dualize(black_box(&mods.c)).unwrap();
            cohomology(&cyc).unwrap()
        })
    });
}

criterion_group!(benches, t_module_algebra, quotient, free_category_nerve, cohomology_ranks);
criterion_main!(benches);
