//! Extends a coloring along a 5-thread and list-colors a subdivided star.

use std::collections::BTreeSet;

use equicolor::coloring::{verify_descending_l, ListAssignment};
use equicolor::lemmas::{extend_45_thread, reduce_star, StarInstance};
use equicolor::{Coloring, Graph};

fn main() {
    // Path 0..=6 whose ends are colored; 1..=5 is the thread.
    let path: Vec<usize> = (0..=6).collect();
    let mut g = Graph::from_edges(path.iter().copied(), path.windows(2).map(|w| (w[0], w[1]))).unwrap();
    let mut f = Coloring::new(5).unwrap();
    f.set(0, 1);
    f.set(6, 2);
    for (v, c) in [(10, 3), (11, 4), (12, 5)] {
        g.add_vertex(v);
        f.set(v, c);
    }
    extend_45_thread(&g, &mut f, &path, 3, &[1]).unwrap();
    println!("thread colors: {:?}", (1..=5).map(|v| f.get(v).unwrap()).collect::<Vec<_>>());

    // Root 0 with one 4-thread and one 2-thread.
    let h = Graph::from_edges(0..7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
    let mut lists = ListAssignment { lists: h.vertices().map(|v| (v, BTreeSet::from([1, 2, 3]))).collect() };
    lists.lists.insert(4, BTreeSet::from([2, 3]));
    lists.lists.insert(6, BTreeSet::from([1, 3]));
    let inst = StarInstance { root: 0, threads: vec![vec![1, 2, 3, 4], vec![5, 6]], a0: 1 };
    let col = reduce_star(&h, &lists, &inst).unwrap();
    println!("star: {:?} valid {}", col.iter().collect::<Vec<_>>(), verify_descending_l(&h, &lists, &col).valid);
}
