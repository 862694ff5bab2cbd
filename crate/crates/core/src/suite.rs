//! End-to-end runs shared by the command line and the acceptance tests.

use serde::Serialize;

use crate::category::{
    build_ccls, build_free_cat, build_q_category, build_t_category, check_hcategory, free_witness, oneobj_iso,
    relabeling, separation_retraction, special_homotopy_from_nat_iso, HCategory, HFunctor, SeparationWitness,
};
use crate::cohomology::{cohomology, dualize, induced_cohomology_map, CochainComplex, CohomologyReport};
use crate::cyclic::{
    build_hopf_cyclic, build_q_algebra, build_qh, build_t_module_algebra, check_cyclic, check_cyclic_map,
    check_paracyclic, compose_graded, identity_map, CyclicHModule, GradedMap, PowerInfo, PowerPolicy,
};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebroid;
use crate::instances::{builtin, InstanceBundle, BUILTIN_NAMES};
use crate::linalg::{rank, SparseMatrix};
use crate::modules::StableModuleComodule;
use crate::report::Report;

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub label: String,
    pub dims: Vec<usize>,
    pub hh: CohomologyReport,
    pub hc: CohomologyReport,
}

pub fn table(label: &str, x: &CyclicHModule) -> Result<Table> {
    let (full, cyc) = dualize(x)?;
    table_of(label, x, &full, &cyc)
}

fn table_of(label: &str, x: &CyclicHModule, full: &CochainComplex, cyc: &CochainComplex) -> Result<Table> {
    Ok(Table {
        label: label.into(),
        dims: x.dims.clone(),
        hh: cohomology(full)?,
        hc: cohomology(cyc)?,
    })
}

/// The algebra-level modules of a bundle: `T(A,M)`, `Q(A,M)`, `C(A,M)`.
pub struct AlgebraModules {
    pub t: crate::cyclic::AlgebraNerve,
    pub powers: Vec<PowerInfo>,
    pub q: CyclicHModule,
    pub c: CyclicHModule,
}

pub fn algebra_modules(b: &InstanceBundle, n_max: usize, policy: PowerPolicy) -> Result<AlgebraModules> {
    let (a, m) = match (&b.right_algebra, &b.right_coeffs) {
        (Some(a), Some(m)) => (a, m),
        _ => return Err(Error::Unsupported(format!("{} has no right module algebra and coefficients", b.name))),
    };
    let t = build_t_module_algebra(&b.hopf, a, m, n_max)?;
    let (qh, powers) = build_qh(&t.module, policy)?;
    let q = build_q_algebra(&qh, &b.hopf)?;
    let c = build_hopf_cyclic(&q, &b.hopf)?;
    Ok(AlgebraModules { t, powers, q, c })
}

fn left_data(b: &InstanceBundle) -> Result<(&crate::modules::ModuleAlgebra, &StableModuleComodule)> {
    match (&b.left_algebra, &b.left_coeffs) {
        (Some(a), Some(m)) => Ok((a, m)),
        _ => Err(Error::Unsupported(format!("{} has no left module algebra and coefficients", b.name))),
    }
}

/// HH and HC of `C(A,M)` and `Q(A,M)`, and of `Q(*^A, M)` when the bundle
/// carries left data over a one-dimensional base.
pub fn cohomology_tables(b: &InstanceBundle, n_max: usize, policy: PowerPolicy) -> Result<Vec<Table>> {
    let mods = algebra_modules(b, n_max, policy)?;
    let mut out = vec![table("C(A,M)", &mods.c)?, table("Q(A,M)", &mods.q)?];
    if let Ok((a, m)) = left_data(b) {
        if b.hopf.left.base().dim() == 1 {
            let star = build_free_cat(&b.hopf, a, 1)?;
            let t = build_t_category(&b.hopf, &star, m, n_max)?;
            out.push(table("Q(*^A,M)", &build_q_category(&b.hopf, &t, policy)?)?);
        }
    }
    Ok(out)
}

fn is_identity_family(ms: &[SparseMatrix]) -> bool {
    ms.iter().all(SparseMatrix::is_identity)
}

/// Induced maps on cohomology in the reliable degrees only.
fn induced(f: &[SparseMatrix], src: &CochainComplex, dst: &CochainComplex) -> Result<Vec<SparseMatrix>> {
    induced_cohomology_map(&f[..src.n_max().min(f.len())], src, dst)
}

#[derive(Clone, Debug, Serialize)]
pub struct MoritaOutcome {
    pub category: Table,
    pub subcategory: Table,
    pub report: Report,
}

impl MoritaOutcome {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Compares `Q(c, M)` with `Q(ξ, M)` through the separation retraction:
/// edge identities of the special homotopy, equal cohomology dimensions in
/// the reliable degrees, mutually inverse maps on cohomology, and equal
/// maps on cohomology for the two ends of the homotopy.
#[allow(clippy::too_many_arguments)]
pub fn morita(
    h: &HopfAlgebroid,
    c: &HCategory,
    m: &StableModuleComodule,
    xi: &[usize],
    w: &SeparationWitness,
    n_max: usize,
    policy: PowerPolicy,
) -> Result<MoritaOutcome> {
    let mut report = Report::new("Morita comparison");
    report.absorb(check_hcategory(h, c));
    let t = build_t_category(h, c, m, n_max)?;
    let q = build_q_category(h, &t, policy)?;
    let cc = build_ccls(h, n_max)?;
    let ret = separation_retraction(h, &t, &q, xi, w, &cc, policy)?;
    report.absorb(ret.homotopy.report.clone());
    let ei = compose_graded(&ret.e, &ret.inclusion);
    report.note("E i = id", ei == identity_map(&ret.q_sub), "");
    let (full_c, cyc_c) = dualize(&q)?;
    let (full_x, cyc_x) = dualize(&ret.q_sub)?;
    let big = table_of("Q(C,M)", &q, &full_c, &cyc_c)?;
    let small = table_of("Q(xi,M)", &ret.q_sub, &full_x, &cyc_x)?;
    report.note(
        "HH dims agree in reliable degrees",
        big.hh.reliable_betti() == small.hh.reliable_betti(),
        format!("{:?} vs {:?}", big.hh.reliable_betti(), small.hh.reliable_betti()),
    );
    report.note(
        "HC dims agree in reliable degrees",
        big.hc.reliable_betti() == small.hc.reliable_betti(),
        format!("{:?} vs {:?}", big.hc.reliable_betti(), small.hc.reliable_betti()),
    );
    for (name, cc_, cx) in [("HH", &full_c, &full_x), ("HC", &cyc_c, &cyc_x)] {
        // E : Q(C) -> Q(ξ) pulls back H(ξ) to H(C); i goes the other way
        let e_star = induced(&ret.e, cc_, cx)?;
        let i_star = induced(&ret.inclusion, cx, cc_)?;
        let ie: Vec<SparseMatrix> = i_star.iter().zip(&e_star).map(|(i, e)| i.compose(e)).collect();
        let ei: Vec<SparseMatrix> = e_star.iter().zip(&i_star).map(|(e, i)| e.compose(i)).collect();
        report.note(
            format!("E^* and i^* are mutually inverse on {name}"),
            is_identity_family(&ie) && is_identity_family(&ei),
            "",
        );
        let ends = homotopy_ends_agree(&identity_map(&q), &compose_graded(&ret.inclusion, &ret.e), cc_)?;
        report.note(format!("id and i E agree on {name}"), ends, "");
    }
    Ok(MoritaOutcome {
        category: big,
        subcategory: small,
        report,
    })
}

/// Whether two graded maps `X -> X` induce the same matrices on the
/// cohomology of `c` in reliable degrees.
pub fn homotopy_ends_agree(f: &GradedMap, g: &GradedMap, c: &CochainComplex) -> Result<bool> {
    Ok(induced(f, c, c)? == induced(g, c, c)?)
}

/// The desk-scale comparison of `*^A` with `F^A_{≤ 2}`.
pub fn morita_free(b: &InstanceBundle, n_max: usize, policy: PowerPolicy) -> Result<MoritaOutcome> {
    let (a, m) = left_data(b)?;
    let c = build_free_cat(&b.hopf, a, 2)?;
    let w = free_witness(&c)?;
    morita(&b.hopf, &c, m, &[0], &w, n_max, policy)
}

/// The relabeling homotopy on `F^A_{≤ 2}`: edge identities, the semi-cyclic
/// check, and equality of the two ends on cohomology.
pub fn relabeling_check(b: &InstanceBundle, n_max: usize, policy: PowerPolicy) -> Result<Report> {
    let (a, m) = left_data(b)?;
    let h = &b.hopf;
    let c = build_free_cat(h, a, 2)?;
    let t = build_t_category(h, &c, m, n_max)?;
    let q = build_q_category(h, &t, policy)?;
    let (g, eta) = relabeling(&c)?;
    let cc = build_ccls(h, n_max)?;
    let hom = special_homotopy_from_nat_iso(h, &t, &q, &t, &q, &HFunctor::identity(&c), &g, &eta, &cc)?;
    let mut r = hom.report.clone();
    let (full, cyc) = dualize(&q)?;
    let f0 = compose_graded(&hom.maps, &hom.edge0);
    let f1 = compose_graded(&hom.maps, &hom.edge1);
    r.note("ends agree on HH", homotopy_ends_agree(&f0, &f1, &full)?, "");
    r.note("ends agree on HC", homotopy_ends_agree(&f0, &f1, &cyc)?, "");
    Ok(r)
}

/// `Q(*^A, M) ≅ Q(A, M)` degreewise.
pub fn oneobj_check(b: &InstanceBundle, n_max: usize, policy: PowerPolicy) -> Result<Report> {
    let (a, m) = left_data(b)?;
    let h = &b.hopf;
    let star = build_free_cat(h, a, 1)?;
    let ts = build_t_category(h, &star, m, n_max)?;
    let qs = build_q_category(h, &ts, policy)?;
    let mods = algebra_modules(b, n_max, policy)?;
    let f = oneobj_iso(&ts, &qs, &mods.t, &mods.q)?;
    let mut r = check_cyclic_map(&f, &qs, &mods.q);
    r.subject = format!("{}: one-object comparison", b.name);
    let ax = r.axiom("degreewise bijective");
    for (n, mat) in f.iter().enumerate() {
        let ok = qs.dims[n] == mods.q.dims[n] && rank(mat) == mods.q.dims[n];
        ax.expect(&[n], ok, || (format!("rank {}", rank(mat)), format!("dim {}", mods.q.dims[n])));
    }
    Ok(r)
}

/// Every builtin through every applicable suite.
pub fn selftest(n_max: usize, policy: PowerPolicy) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for name in BUILTIN_NAMES {
        let b = builtin(name).expect("builtin");
        out.push(b.validate());
        if b.right_algebra.is_none() {
            continue;
        }
        let mods = algebra_modules(&b, n_max, policy)?;
        let mut r = check_paracyclic(&mods.t.module);
        r.subject = format!("{name}: T(A,M) para-cyclic");
        out.push(r);
        let mut r = check_cyclic(&mods.q);
        r.subject = format!("{name}: Q(A,M) cyclic");
        out.push(r);
        let mut r = check_cyclic(&mods.c);
        r.subject = format!("{name}: C(A,M) cyclic");
        out.push(r);
        if matches!(name, "trivial" | "group2" | "group3" | "product2" | "dual_numbers") {
            out.push(oneobj_check(&b, n_max.min(3), policy)?);
        }
    }
    let g = builtin("group2").expect("builtin");
    let mut m = morita_free(&g, 3.min(n_max), policy)?;
    m.report.subject = "group2: Morita comparison".into();
    out.push(m.report);
    let mut r = relabeling_check(&g, 2.min(n_max), policy)?;
    r.subject = "group2: relabeling homotopy".into();
    out.push(r);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::instance_group;

    #[test]
    fn morita_on_group2() {
        let m = morita_free(&instance_group(2), 3, PowerPolicy::default()).unwrap();
        assert!(m.passed(), "{}", m.report);
        assert_eq!(m.category.hc.reliable_betti(), m.subcategory.hc.reliable_betti());
    }

    #[test]
    fn relabeling_on_group2() {
        let r = relabeling_check(&instance_group(2), 2, PowerPolicy::default()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn broken_witness_is_refused() {
        let b = instance_group(2);
        let (a, m) = left_data(&b).unwrap();
        let c = build_free_cat(&b.hopf, a, 2).unwrap();
        let mut w = free_witness(&c).unwrap();
        w.pieces[1].pop();
        let err = morita(&b.hopf, &c, m, &[0], &w, 2, PowerPolicy::default()).unwrap_err();
        assert!(matches!(err, Error::InvalidInstance(_)));
    }
}
