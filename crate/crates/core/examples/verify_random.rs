//! Checks the eigenvalue-sum bounds and the Riesz-mean bounds on seeded
//! random perturbations, printing the tightest margin per bound.
//!
//! ```bash
//! cargo run --release -p jacobi-lt --example verify_random
//! ```

use std::collections::BTreeMap;

use jacobi_lt::harness::model::RandomModel;
use jacobi_lt::harness::random_instances;
use jacobi_lt::harness::report::Verdict;
use jacobi_lt::harness::verify::{verify_instance, VerifyOptions};

pub fn main() {
    let model = RandomModel::new(7);
    let instances = random_instances(&model, 100).unwrap();
    let opts = VerifyOptions::default();

    let mut tightest: BTreeMap<&str, f64> = BTreeMap::new();
    let mut failures = 0;
    for inst in &instances {
        for r in verify_instance(inst, &opts).expect("spectrum converges") {
            if r.pass == Verdict::Informational {
                continue;
            }
            failures += usize::from(r.failed());
            let m = tightest
                .entry(r.inequality.label())
                .or_insert(f64::INFINITY);
            *m = m.min(r.margin);
        }
    }
    println!("{} instances, {failures} failed checks", instances.len());
    for (label, margin) in &tightest {
        println!("  {label:10} smallest margin {margin:.3e}");
    }
    assert_eq!(failures, 0);
}
