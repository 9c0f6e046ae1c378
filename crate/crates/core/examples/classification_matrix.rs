//! Classify every catalog (field, group) pair and report timing; a
//! library usage demonstration.

use schurkit::classify::{kg_kleinian, unit_group_structure, UnitOptions};
use schurkit::csa::Kleinian;
use schurkit::cyclofield::parse_field;
use schurkit::groups::parse_group;
use std::time::Instant;
fn main() {
    let opts = UnitOptions::default();
    let t0 = Instant::now();
    let mut undet = 0;
    let mut total = 0;
    for fs in schurkit::verify::catalog_fields() {
        for gs in schurkit::verify::catalog_small() {
            let k = parse_field(fs).unwrap();
            let g = parse_group(gs).unwrap();
            let kv = kg_kleinian(&k, &g).expect("kleinian decision");
            let uv = unit_group_structure(&k, &g, &opts).expect("unit decision");
            total += 1;
            if kv.verdict == Kleinian::Undetermined {
                undet += 1;
                println!("UNDETERMINED: ({fs}, {gs})");
            }
            // consistency: Kleinian-no means the verdict cannot be fbf or better
            if kv.verdict == Kleinian::No
                && uv.class <= schurkit::classify::VerdictClass::VirtuallyProductOfFreeByFree
            {
                println!(
                    "INCONSISTENT ffK: ({fs}, {gs}) {:?} {:?}",
                    kv.verdict, uv.class
                );
            }
        }
    }
    println!(
        "matrix: {total} pairs, {undet} undetermined, {:?}",
        t0.elapsed()
    );
}
