use std::path::PathBuf;
use std::process::{Command, Output};

use hopfcyc::category::{build_free_cat, free_witness};
use hopfcyc::format::{to_json, CategoryFile, InstanceFile, WitnessFile};
use hopfcyc::instances::{instance_enveloping, instance_group};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcyc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn temp_file(tag: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("hopfcyc-{}-{tag}.json", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn enveloping_validates() {
    let o = run(&["validate", "--builtin", "enveloping"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn enveloping_file_validates_and_perturbation_fails() {
    let text = to_json(&instance_enveloping());
    let p = temp_file("env", &text);
    let o = run(&["validate", "--instance", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["hopf"]["antipode"][0][0] = Value::String("2".into());
    let p = temp_file("env-bad", &v.to_string());
    let o = run(&["validate", "--instance", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] Hopf algebroid: S S^-1 = id"), "{out}");
}

#[test]
fn zero_denominator_is_an_input_error() {
    let text = to_json(&instance_group(2)).replacen("\"1\"", "\"1/0\"", 1);
    let p = temp_file("zero-den", &text);
    let o = run(&["validate", "--instance", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("parse error at hopf.total"), "{err}");
    assert!(err.contains("line"), "{err}");
}

#[test]
fn unknown_builtin_and_missing_file_are_input_errors() {
    assert_eq!(run(&["validate", "--builtin", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "--instance", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(run(&["nerve", "--max-degree", "0"]).status.code(), Some(2));
}

#[test]
fn trivial_cohomology_table() {
    let o = run(&["cohomology", "--builtin", "trivial", "--max-degree", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["label"], "C(A,M)");
    let rows = v[0]["hc"]["rows"].as_array().unwrap();
    let betti: Vec<u64> = rows[..3].iter().map(|r| r["betti"].as_u64().unwrap()).collect();
    assert_eq!(betti, vec![1, 0, 1]);
    assert!(rows[..3].iter().all(|r| r["reliable"] == true));
    assert_eq!(rows[3]["reliable"], false);
}

#[test]
fn degree_one_flags_only_degree_zero() {
    let o = run(&["cohomology", "--builtin", "group2", "--max-degree", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let flags: Vec<bool> = v[0]["hc"]["rows"].as_array().unwrap().iter().map(|r| r["reliable"].as_bool().unwrap()).collect();
    assert_eq!(flags, vec![true, false]);
}

#[test]
fn nerve_reports_dimensions() {
    let o = run(&["nerve", "--builtin", "group2_twisted", "--max-degree", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let t: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|r| r["t"].as_u64().unwrap()).collect();
    assert_eq!(t, vec![2, 4, 8]);
    let ord: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|r| r["tau_order"].as_u64().unwrap()).collect();
    assert_eq!(ord, vec![2, 4, 6]);
}

#[test]
fn intersection_variant_is_accepted() {
    let o = run(&["nerve", "--builtin", "group2", "--max-degree", "2", "--quotient-variant", "intersection"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn builtin_morita_passes() {
    let o = run(&["morita", "--builtin", "group2", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("[ok  ] HC dims agree in reliable degrees"));
}

fn category_file(break_witness: bool) -> String {
    let b = instance_group(2);
    let c = build_free_cat(&b.hopf, b.left_algebra.as_ref().unwrap(), 2).unwrap();
    let mut w = free_witness(&c).unwrap();
    if break_witness {
        w.pieces[1][1].2 = hopfcyc::SparseVec::new();
    }
    let mut f = InstanceFile::from_bundle(&b);
    f.category = Some(CategoryFile::from_category(&c));
    f.witness = Some(WitnessFile::from_witness(&[0], &w, &c));
    serde_json::to_string_pretty(&f).unwrap()
}

#[test]
fn file_morita_passes_and_broken_witness_fails() {
    let p = temp_file("cat", &category_file(false));
    let o = run(&["morita", "--instance", p.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));

    let p = temp_file("cat-bad", &category_file(true));
    let o = run(&["morita", "--instance", p.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("Σ v_i u_i = id"), "{err}");
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest", "--max-degree", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&run(&["nerve", "--builtin", "cm_twist", "--max-degree", "2"]));
    let b = stdout(&run(&["nerve", "--builtin", "cm_twist", "--max-degree", "2"]));
    assert_eq!(a, b);
}

// ℚ^2 ⋊ ℤ/2 ≅ M_2(ℚ), so the classical oracle of M_2(ℚ) gives the expected table.
#[test]
fn group2_table_matches_crossed_product_oracle() {
    use hopfcyc::algebra::FiniteAlgebra;
    use hopfcyc::cohomology::{classical_cyclic_oracle, cohomology, dualize};

    let (full, cyc) = dualize(&classical_cyclic_oracle(&FiniteAlgebra::matrix_algebra(2), 4)).unwrap();
    let hh = cohomology(&full).unwrap().reliable_betti();
    let hc = cohomology(&cyc).unwrap().reliable_betti();

    let o = run(&["cohomology", "--builtin", "group2", "--max-degree", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reliable = |key: &str| -> Vec<usize> {
        v[0][key]["rows"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|r| r["reliable"] == true)
            .map(|r| r["betti"].as_u64().unwrap() as usize)
            .collect()
    };
    assert_eq!(reliable("hh"), hh);
    assert_eq!(reliable("hc"), hc);
}
