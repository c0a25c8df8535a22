//! Reduces every gadget and prints the configuration sequence.

use std::collections::BTreeMap;

use equicolor::generators::all_gadgets;
use equicolor::solver::{equitable_color_with, SolverOptions};

fn main() {
    let opts = SolverOptions { check_invariants: true, unchecked: false, trace: true };
    for gd in all_gadgets() {
        let sol = equitable_color_with(&gd.graph, gd.colors, &opts).unwrap();
        let mut kinds = BTreeMap::new();
        for t in &sol.trace {
            *kinds.entry(format!("{:?}", t.kind)).or_insert(0) += 1;
        }
        println!("{:<26} n={:<3} m={} {kinds:?}", gd.name, gd.graph.order(), gd.colors);
    }
}
