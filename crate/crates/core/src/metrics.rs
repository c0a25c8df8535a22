//! Girth, exact maximum average degree and degree summaries.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::flow::FlowNetwork;
use crate::graph::{Graph, GraphError, Vertex};

pub type Rational = Ratio<i64>;

/// Serializes an exact rational as `"p/q"` (always with a denominator).
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Girth::Finite(a), Girth::Finite(b)) => a.cmp(b),
            (Girth::Finite(_), Girth::Infinite) => Ordering::Less,
            (Girth::Infinite, Girth::Finite(_)) => Ordering::Greater,
            (Girth::Infinite, Girth::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Length of a shortest cycle. A BFS from every vertex; the first non-tree
/// edge met at depth `d` closes a cycle of length at most `2d + 1` through
/// the root, and the minimum over all roots is exact.
pub fn girth(g: &Graph) -> Girth {
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; g.capacity()];
    let mut parent = vec![usize::MAX; g.capacity()];
    let mut touched = Vec::new();
    for root in g.vertices() {
        for &v in &touched {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        touched.clear();
        dist[root] = 0;
        touched.push(root);
        let mut queue = VecDeque::from([root]);
        'bfs: while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if dist[w] == dist[u] {
                        break 'bfs;
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Densest subgraph found by the exact computation.
#[derive(Clone, Debug)]
pub struct MadWitness {
    pub mad: Rational,
    pub vertices: Vec<Vertex>,
}

fn induced_edge_count(g: &Graph, vs: &[Vertex]) -> usize {
    let set: BTreeSet<Vertex> = vs.iter().copied().collect();
    vs.iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&w| u < w && set.contains(&w)).count())
        .sum()
}

/// Maximizes `2 q |E(H)| - p |V(H)|` over vertex sets by a min cut in the
/// edge/vertex selection network. Returns the value and a maximizer.
fn best_excess(g: &Graph, lambda: Rational) -> (i64, Vec<Vertex>) {
    let (p, q) = (*lambda.numer(), *lambda.denom());
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut index = vec![usize::MAX; g.capacity()];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let source = 0;
    let sink = 1;
    let edge_base = 2;
    let vert_base = edge_base + edges.len();
    let mut net = FlowNetwork::new(vert_base + verts.len());
    let inf = i64::MAX / 4;
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_arc(source, edge_base + i, 2 * q);
        net.add_arc(edge_base + i, vert_base + index[u], inf);
        net.add_arc(edge_base + i, vert_base + index[v], inf);
    }
    for i in 0..verts.len() {
        net.add_arc(vert_base + i, sink, p);
    }
    let cut = net.max_flow(source, sink);
    let value = 2 * q * edges.len() as i64 - cut;
    let side = net.source_side(source);
    let chosen = verts
        .iter()
        .enumerate()
        .filter(|(i, _)| side[vert_base + i])
        .map(|(_, &v)| v)
        .collect();
    (value, chosen)
}

/// Exact maximum average degree together with a densest vertex set.
///
/// Dinkelbach iteration: start from the whole graph's average degree and
/// repeatedly replace the current density by that of the subgraph maximizing
/// `2|E(H)| - lambda |V(H)|` until that maximum is zero. Every iterate is the
/// density of an actual subgraph, so the result is an exact fraction.
pub fn mad_with_witness(g: &Graph) -> Result<MadWitness, GraphError> {
    if g.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    let mut witness: Vec<Vertex> = g.vertices().collect();
    let mut lambda = Rational::new(2 * g.size() as i64, g.order() as i64);
    loop {
        let (value, chosen) = best_excess(g, lambda);
        if value <= 0 || chosen.is_empty() {
            return Ok(MadWitness { mad: lambda, vertices: witness });
        }
        let e = induced_edge_count(g, &chosen) as i64;
        let next = Rational::new(2 * e, chosen.len() as i64);
        debug_assert!(next > lambda);
        lambda = next;
        witness = chosen;
    }
}

pub fn mad_exact(g: &Graph) -> Result<Rational, GraphError> {
    mad_with_witness(g).map(|w| w.mad)
}

#[derive(Clone, Debug, Serialize)]
pub struct Metrics {
    pub order: usize,
    pub size: usize,
    pub girth: Girth,
    #[serde(serialize_with = "serialize_rational")]
    pub mad: Rational,
    pub min_degree: usize,
    pub max_degree: usize,
}

pub fn metrics(g: &Graph) -> Result<Metrics, GraphError> {
    Ok(Metrics {
        order: g.order(),
        size: g.size(),
        girth: girth(g),
        mad: mad_exact(g)?,
        min_degree: g.min_degree().unwrap_or(0),
        max_degree: g.max_degree().unwrap_or(0),
    })
}
