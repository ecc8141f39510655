//! Runs the law suite for a rig and summarizes it.
//!
//! Run with `cargo run --example law_suite -- mat2:1 1`.

use rigdist::lawcheck::{run_suite, SuiteConfig};
use rigdist::{with_rig, RigName};

fn main() {
    let mut args = std::env::args().skip(1);
    let name: RigName = args.next().unwrap_or_else(|| "mod:3".into()).parse().expect("rig name");
    let size: usize = args.next().map_or(2, |s| s.parse().expect("size"));

    let reports = with_rig!(name, |rig| run_suite(&rig, &SuiteConfig::new(size, 0)).unwrap());
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    println!("{name}, carriers of size {size}: {} laws, {cases} cases", reports.len());
    for r in reports.iter().filter(|r| !r.passed()) {
        let w = &r.violations[0];
        let tag = if r.requires_commutative { " (needs commutativity)" } else { "" };
        println!("  {}{tag}: {} of {} cases fail", r.law, r.violations.len(), r.cases);
        println!("    inputs {}", w.inputs.join(", "));
        println!("    lhs {}  rhs {}", w.lhs, w.rhs);
    }
}
