use equicolor::generators::{family, FamilyParams};
use equicolor::metrics::{fmt_rational, mad_with_witness, metrics};
use equicolor::solver::upper_threshold;

fn main() {
    for (name, params) in [("petersen", ""), ("theta", "5,6,7"), ("subdivided", "4,3")] {
        let g = family(name, &params.parse::<FamilyParams>().unwrap()).unwrap();
        let m = metrics(&g).unwrap();
        let w = mad_with_witness(&g).unwrap();
        println!(
            "{name}({params}): {m:?}, densest part has {} vertices, mad {}, colors from {:?}",
            w.vertices.len(),
            fmt_rational(&w.mad),
            upper_threshold(&g).unwrap()
        );
    }
}
