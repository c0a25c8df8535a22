//! Thread decomposition of a theta graph with one branch vertex replaced by
//! a pendant cycle.

use equicolor::generators::{family, FamilyParams};
use equicolor::threads::{loosely_adjacent, ThreadMap};

fn main() {
    let mut g = family("theta", &"5,6,7".parse::<FamilyParams>().unwrap()).unwrap();
    let hub = g.vertices().find(|&v| g.degree(v) == 3).unwrap();
    let fresh: Vec<usize> = (100..108).collect();
    let mut prev = hub;
    for &v in &fresh {
        g.add_edge(prev, v).unwrap();
        prev = v;
    }
    g.add_edge(prev, hub).unwrap();

    let map = ThreadMap::build(&g).unwrap();
    for t in &map.threads {
        println!("{} -> {} through {:?}", t.start, t.end, t.interior);
    }
    println!("profile of {hub}: {:?}", map.profile(hub).unwrap());
    println!("loosely 1-adjacent to {hub}: {:?}", loosely_adjacent(&g, hub, 1));
}
