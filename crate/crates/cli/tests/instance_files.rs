//! The files under `instances/` are the serialized builtins. Set
//! `HOPFCYC_BLESS=1` to rewrite them.

use std::path::PathBuf;
use std::process::Command;

use hopfcyc::category::{build_free_cat, free_witness};
use hopfcyc::format::{to_json, CategoryFile, InstanceFile, WitnessFile};
use hopfcyc::instances::{builtin, instance_group, BUILTIN_NAMES};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../instances")
}

fn group2_free() -> String {
    let b = instance_group(2);
    let c = build_free_cat(&b.hopf, b.left_algebra.as_ref().unwrap(), 2).unwrap();
    let w = free_witness(&c).unwrap();
    let mut f = InstanceFile::from_bundle(&b);
    f.category = Some(CategoryFile::from_category(&c));
    f.witness = Some(WitnessFile::from_witness(&[0], &w, &c));
    serde_json::to_string_pretty(&f).unwrap()
}

fn expected() -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = BUILTIN_NAMES
        .iter()
        .map(|n| (format!("{n}.json"), to_json(&builtin(n).unwrap()) + "\n"))
        .collect();
    v.push(("group2_free2.json".into(), group2_free() + "\n"));
    v
}

#[test]
fn instance_files_are_current() {
    let bless = std::env::var_os("HOPFCYC_BLESS").is_some();
    if bless {
        std::fs::create_dir_all(dir()).unwrap();
    }
    for (name, text) in expected() {
        let path = dir().join(&name);
        if bless {
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, text, "{name} is stale; rerun with HOPFCYC_BLESS=1");
    }
}

#[test]
fn instance_files_validate() {
    for (name, _) in expected() {
        let path = dir().join(&name);
        let o = Command::new(env!("CARGO_BIN_EXE_hopfcyc"))
            .args(["validate", "--instance", path.to_str().unwrap()])
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&o.stdout));
    }
}
