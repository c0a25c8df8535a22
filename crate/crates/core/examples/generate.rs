//! Writes a random girth-14 graph in DIMACS format to stdout.

use equicolor::dimacs::write_graph;
use equicolor::generators::{random_sparse, GenSpec};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let spec = GenSpec::parse(&format!("n0=12,q=2..3,girth=14,seed={seed}")).unwrap();
    let g = random_sparse(&spec).unwrap();
    print!("{}", write_graph(&g, &[&format!("seed {seed}")]));
}
