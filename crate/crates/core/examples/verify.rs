//! Checks a coloring, then breaks it and checks again.

use equicolor::generators::{family, FamilyParams};
use equicolor::solver::color_cycle;
use equicolor::verify_equitable;

fn main() {
    let g = family("cycle", &FamilyParams::list(&[11])).unwrap();
    let mut f = color_cycle(11, 3).unwrap();
    println!("{:?}", verify_equitable(&g, &f).unwrap());
    f.swap(1, 2);
    f.set(3, f.get(2).unwrap());
    println!("{:?}", verify_equitable(&g, &f).unwrap());
}
