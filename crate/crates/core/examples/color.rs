//! Colors a random subdivided cubic graph with 4 to 8 colors.

use equicolor::generators::{random_sparse, GenSpec};
use equicolor::solver::equitable_color;

fn main() {
    let g = random_sparse(&GenSpec::new(60, vec![1, 2], 10, 7)).expect("generator");
    for m in 4..=8 {
        let f = equitable_color(&g, m).expect("graph is in range");
        println!("m={m}: class sizes {:?}", f.class_sizes());
    }
}
