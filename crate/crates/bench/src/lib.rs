//! Fixtures shared by the benches.

use hopfcyc::category::{build_free_cat, HCategory};
use hopfcyc::instances::{instance_group, InstanceBundle};

pub fn group(n: usize) -> InstanceBundle {
    instance_group(n)
}

/// `F^A_{≤r}` for the group instance of order `n`.
pub fn free_category(n: usize, r: usize) -> (InstanceBundle, HCategory) {
    let b = instance_group(n);
    let c = build_free_cat(&b.hopf, b.left_algebra.as_ref().expect("left algebra"), r).expect("free category");
    (b, c)
}
