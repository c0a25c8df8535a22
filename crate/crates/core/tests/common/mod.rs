//! Graph corpora shared by the integration tests.

#![allow(dead_code)]

pub mod checks;
pub mod sweeps;

use equicolor::generators::{family, random_sparse, FamilyParams, GenSpec};
use equicolor::metrics::{girth, mad_exact, Rational};
use equicolor::Graph;

/// A named graph in a test corpus.
pub struct Case {
    pub name: String,
    pub graph: Graph,
}

fn fam(name: &str, params: &str) -> Graph {
    family(name, &params.parse::<FamilyParams>().unwrap()).unwrap()
}

/// Minimum degree 2, girth at least `girth_min` and `mad` below `bound`.
pub fn meets(g: &Graph, girth_min: usize, bound: Rational) -> bool {
    g.min_degree().unwrap_or(0) >= 2 && girth(g).at_least(girth_min) && mad_exact(g).unwrap() < bound
}

/// Random graphs from a list of `(base_size, subdivisions, max_degree)`
/// shapes, `per_shape` seeds each.
fn random_cases(shapes: &[(usize, &[usize], usize)], girth_min: usize, per_shape: u64, tag: &str) -> Vec<Case> {
    let mut out = Vec::new();
    for (i, &(n0, q, maxdeg)) in shapes.iter().enumerate() {
        for seed in 0..per_shape {
            let mut spec = GenSpec::new(n0, q.to_vec(), girth_min, 1000 * i as u64 + seed);
            spec.max_degree = maxdeg;
            if let Ok(g) = random_sparse(&spec) {
                out.push(Case { name: format!("{tag}-n0{n0}-q{q:?}-d{maxdeg}-s{seed}"), graph: g });
            }
        }
    }
    out
}

/// Graphs with girth at least 10 and `mad < 5/2`, from a few dozen
/// vertices up to about two thousand.
pub fn corpus_m4() -> Vec<Case> {
    let mut out: Vec<Case> = [
        ("cycle", "10"),
        ("cycle", "23"),
        ("cycle", "101"),
        ("theta", "5,5,5"),
        ("theta", "5,6,9"),
        ("theta", "6,6,6"),
        ("theta", "9,9,9"),
    ]
    .iter()
    .map(|(f, p)| Case { name: format!("{f}({p})"), graph: fam(f, p) })
    .collect();
    out.extend(random_cases(
        &[
            (4, &[3, 4], 3),
            (8, &[1, 2], 3),
            (12, &[1, 2, 3], 3),
            (24, &[1, 2], 3),
            (40, &[2, 3, 4], 4),
            (64, &[1, 2], 3),
            (128, &[1, 2, 3], 3),
            (200, &[3, 4], 4),
            (300, &[1, 2], 3),
            (500, &[1, 2], 3),
            (600, &[1, 2], 3),
            (800, &[1], 3),
        ],
        10,
        18,
        "m4",
    ));
    out.retain(|c| meets(&c.graph, 10, Rational::new(5, 2)));
    out
}

/// Graphs with girth at least 14 and `mad < 7/3`.
pub fn corpus_m3() -> Vec<Case> {
    let mut out: Vec<Case> = [("cycle", "14"), ("cycle", "57"), ("theta", "7,7,7"), ("theta", "7,8,12"), ("theta", "8,8,8")]
        .iter()
        .map(|(f, p)| Case { name: format!("{f}({p})"), graph: fam(f, p) })
        .collect();
    out.extend(random_cases(
        &[
            (4, &[4, 5], 3),
            (8, &[2, 3], 3),
            (16, &[2, 3, 4], 3),
            (40, &[2, 3], 3),
            (100, &[2, 4], 3),
            (200, &[2, 3], 3),
            (400, &[2, 3], 3),
            (30, &[5, 6], 4),
        ],
        14,
        27,
        "m3",
    ));
    out.retain(|c| meets(&c.graph, 14, Rational::new(7, 3)));
    out
}

/// Every graph on at most 20 vertices among cycles, theta graphs, two
/// cycles sharing a vertex and small random subdivisions, that meets the
/// girth 10 hypotheses.
pub fn small_corpus() -> Vec<Case> {
    let mut out = Vec::new();
    for n in 10..=20 {
        out.push(Case { name: format!("cycle({n})"), graph: fam("cycle", &n.to_string()) });
    }
    for a in 1..=18 {
        for b in a..=18 {
            for c in b..=18 {
                if a + b >= 10 && a + b + c - 1 <= 20 {
                    let p = format!("{a},{b},{c}");
                    out.push(Case { name: format!("theta({p})"), graph: fam("theta", &p) });
                }
            }
        }
    }
    for (a, b) in [(10, 10), (10, 11)] {
        let mut g = Graph::with_vertices(0..a + b - 1);
        for i in 0..a {
            g.add_edge(i, (i + 1) % a).unwrap();
        }
        let ring: Vec<usize> = std::iter::once(0).chain(a..a + b - 1).collect();
        for i in 0..b {
            g.add_edge(ring[i], ring[(i + 1) % b]).unwrap();
        }
        out.push(Case { name: format!("figure_eight({a},{b})"), graph: g });
    }
    out.extend(random_cases(&[(4, &[2, 3], 3), (5, &[2, 3], 3), (6, &[2], 3)], 10, 12, "small"));
    out.retain(|c| c.graph.order() <= 20 && meets(&c.graph, 10, Rational::new(5, 2)));
    out
}
