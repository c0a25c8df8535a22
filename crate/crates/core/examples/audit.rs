use equicolor::discharge::audit;
use equicolor::generators::{gadget, random_sparse, GenSpec};
use equicolor::solver::{ConfigKind, Mode};

fn main() {
    let g = random_sparse(&GenSpec::new(40, vec![2, 3], 14, 1)).unwrap();
    let r = audit(&g, Mode::M3).unwrap();
    println!("random: total {} -> {}, {} negative, {} falsified", r.total_initial, r.total_final, r.negative.len(), r.falsified);

    let g = gadget(ConfigKind::BadNeighborhood);
    let r = audit(&g, Mode::M4).unwrap();
    for v in r.negative.iter().take(3) {
        println!("vertex {} at {}: {:?} via {:?}", v.vertex, v.charge, v.verdict, v.witness.as_ref().map(|w| w.kind));
    }
}
