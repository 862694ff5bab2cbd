//! One line per acceptance criterion; exits non-zero if any fails.

use std::time::{Duration, Instant};

use serde_json::Value;

use hopfcyc::algebra::FiniteAlgebra;
use hopfcyc::cohomology::{classical_cyclic_oracle, cohomology, dualize};
use hopfcyc::cyclic::{check_cyclic, check_paracyclic, PowerPolicy};
use hopfcyc::format::{parse_instance, to_json};
use hopfcyc::instances::{
    instance_cm_twist, instance_enveloping, instance_ground_with_algebra, instance_group, instance_trivial,
    unstable_coefficients,
};
use hopfcyc::suite::{algebra_modules, morita_free, oneobj_check, relabeling_check};
use hopfcyc::Result;

// Generated by `classical_cyclic_oracle` with n_max = 5 and frozen.
const PRODUCT2_HH: [usize; 4] = [2, 0, 0, 0];
const PRODUCT2_HC: [usize; 4] = [2, 0, 2, 0];
const DUAL_NUMBERS_HH: [usize; 4] = [2, 1, 1, 1];
const DUAL_NUMBERS_HC: [usize; 4] = [2, 0, 2, 0];

type Criterion = fn() -> Result<Outcome>;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { ok, detail: detail.into() })
}

fn policy() -> PowerPolicy {
    PowerPolicy::default()
}

/// Every string leaf of `v` below `path`, as a JSON pointer.
fn leaves(v: &Value, path: String, out: &mut Vec<String>) {
    match v {
        Value::String(_) => out.push(path),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, e)| leaves(e, format!("{path}/{i}"), out)),
        Value::Object(o) => o.iter().for_each(|(k, e)| leaves(e, format!("{path}/{k}"), out)),
        _ => {}
    }
}

fn validators() -> Result<Outcome> {
    let mut bad = Vec::new();
    for b in [instance_trivial(), instance_group(2), instance_group(3), instance_enveloping(), instance_cm_twist()] {
        let r = b.validate();
        if !r.passed() {
            bad.push(format!("{}: {:?}", b.name, r.failed_axioms()));
        }
    }
    let original = parse_instance(&to_json(&instance_enveloping()))?.bundle.hopf;
    let doc: Value = serde_json::from_str(&to_json(&instance_enveloping())).unwrap();
    let mut paths = Vec::new();
    leaves(&doc["hopf"], "/hopf".into(), &mut paths);
    let (mut caught, mut balanced) = (0, 0);
    for p in &paths {
        let mut d = doc.clone();
        let slot = d.pointer_mut(p).unwrap();
        *slot = Value::String(if slot == "0" { "1" } else { "0" }.into());
        let hopf = match parse_instance(&d.to_string()) {
            Ok(l) => l.bundle.hopf,
            Err(e) => {
                bad.push(format!("{p}: rejected before validation: {e}"));
                continue;
            }
        };
        let r = hopf.check();
        if !r.failed_axioms().is_empty() {
            caught += 1;
            continue;
        }
        // A coproduct-lift entry in the balancing relations leaves H ⊗_B H unchanged.
        let same = [(&hopf.left, &original.left), (&hopf.right, &original.right)].iter().all(|(x, y)| {
            (0..4).all(|i| {
                let e = hopfcyc::SparseVec::unit(i);
                x.pair().project(&x.delta(&e)) == y.pair().project(&y.delta(&e))
            })
        });
        if same && p.contains("/delta/") {
            balanced += 1;
        } else {
            bad.push(format!("{p}: no axiom failed"));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "5 instances valid; {caught} of {} single-entry flips name a failing axiom, {balanced} lie in the balancing relations{}",
            paths.len(),
            if bad.is_empty() { String::new() } else { format!("; {bad:?}") }
        ),
    )
}

fn paracyclic() -> Result<Outcome> {
    let mods = algebra_modules(&instance_group(2), 4, policy())?;
    let r = check_paracyclic(&mods.t.module);
    let names = ["τ τ^-1 = τ^-1 τ = id", "d_i = τ^i d_0 τ^-i", "s_i = τ^i s_0 τ^-i"];
    let present = names.iter().all(|n| r.axioms.iter().any(|a| a.name == *n));
    outcome(r.passed() && present, format!("T(A,M) group2 n<=4: {} identities", r.axioms.len()))
}

fn cyclic() -> Result<Outcome> {
    let mut ok = true;
    for b in [instance_group(2), instance_cm_twist()] {
        let mods = algebra_modules(&b, 4, policy())?;
        ok &= check_cyclic(&mods.q).passed();
    }
    let mut control = instance_group(2);
    control.right_coeffs = Some(unstable_coefficients(&control.hopf));
    let t = hopfcyc::cyclic::build_t_module_algebra(
        &control.hopf,
        control.right_algebra.as_ref().unwrap(),
        control.right_coeffs.as_ref().unwrap(),
        4,
    )?;
    let control_fails = check_cyclic(&t.module).has_failure("τ^{n+1} = id");
    outcome(ok && control_fails, format!("Q(A,M) cyclic for group2, cm_twist; unstable control fails: {control_fails}"))
}

fn degeneration() -> Result<Outcome> {
    let cases = [
        ("product2", FiniteAlgebra::product(2), PRODUCT2_HH, PRODUCT2_HC),
        ("dual_numbers", FiniteAlgebra::truncated_polynomial(2), DUAL_NUMBERS_HH, DUAL_NUMBERS_HC),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, a, hh_gold, hc_gold) in cases {
        let (of, oc) = dualize(&classical_cyclic_oracle(&a, 4))?;
        let (ohh, ohc) = (cohomology(&of)?.reliable_betti(), cohomology(&oc)?.reliable_betti());
        let mods = algebra_modules(&instance_ground_with_algebra(name, a), 4, policy())?;
        let (cf, cc) = dualize(&mods.c)?;
        let (hh, hc) = (cohomology(&cf)?.reliable_betti(), cohomology(&cc)?.reliable_betti());
        ok &= hh == ohh && hc == ohc && hh == hh_gold && hc == hc_gold;
        detail.push(format!("{name} HH {hh:?} HC {hc:?}"));
    }
    outcome(ok, detail.join("; "))
}

fn oneobj() -> Result<Outcome> {
    let r = oneobj_check(&instance_group(2), 3, policy())?;
    outcome(r.passed(), "Q(*^A,M) ≅ Q(A,M) group2 n<=3")
}

fn homotopy() -> Result<Outcome> {
    let r = relabeling_check(&instance_group(2), 2, policy())?;
    let edges = ["ħ ε_0 = Q(F)", "ħ ε_1 = Q(G)"];
    let present = edges.iter().all(|n| r.axioms.iter().any(|a| a.name == *n));
    outcome(r.passed() && present, format!("relabeling on F_{{<=2}} n<=2: {} checks", r.axioms.len()))
}

fn morita() -> Result<Outcome> {
    let o = morita_free(&instance_group(2), 3, policy())?;
    let small = o.category.dims.iter().all(|&d| d < 10_000);
    outcome(
        o.passed() && small,
        format!(
            "HC {:?} = {:?}, HH {:?} = {:?}",
            o.category.hc.reliable_betti(),
            o.subcategory.hc.reliable_betti(),
            o.category.hh.reliable_betti(),
            o.subcategory.hh.reliable_betti()
        ),
    )
}

fn soundness() -> Result<Outcome> {
    let r = relabeling_check(&instance_group(2), 2, policy())?;
    let m = morita_free(&instance_group(2), 2, policy())?;
    let names = ["ends agree on HH", "ends agree on HC"];
    let mnames = ["id and i E agree on HH", "id and i E agree on HC"];
    let find = |rep: &hopfcyc::report::Report, n: &str| rep.axioms.iter().any(|a| a.name == n && a.passed());
    let ok = names.iter().all(|n| find(&r, n)) && mnames.iter().all(|n| find(&m.report, n));
    outcome(ok, "relabeling ends and id, i E induce equal cohomology matrices")
}

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("validators", validators),
        ("para-cyclic identities", paracyclic),
        ("cyclic quotient", cyclic),
        ("degeneration oracle", degeneration),
        ("one-object isomorphism", oneobj),
        ("special homotopy", homotopy),
        ("Morita comparison", morita),
        ("homotopy soundness", soundness),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match f() {
            Ok(o) => (o.ok, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let t: Duration = start.elapsed();
        failed += usize::from(!ok);
        println!(
            "criterion {}: {} {name} [{:.2}s] {detail}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            t.as_secs_f64()
        );
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
