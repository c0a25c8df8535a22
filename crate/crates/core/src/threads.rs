//! Thread decomposition.
//!
//! A thread is a maximal path whose interior vertices have degree 2 and whose
//! endpoints have degree at least 3 (a *k-thread* has `k` interior vertices),
//! or a cycle through exactly one branch vertex, reported with equal
//! endpoints. A branch vertex and a 2-vertex on a common thread at
//! thread-distance `l + 1` are *loosely l-adjacent*.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ThreadError {
    #[error("component {0:?} has no vertex of degree >= 3")]
    PureCycleComponent(Vec<Vertex>),
    #[error("vertex {0} is not a branch vertex")]
    NotBranchVertex(Vertex),
    #[error("vertex {0} has degree below 2")]
    LowDegree(Vertex),
    #[error("a thread at vertex {0} has equal endpoints")]
    ThreadCycle(Vertex),
    #[error("vertices {0} and {1} are not joined by a 1-thread")]
    NotOneThreadPair(Vertex, Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Thread {
    pub start: Vertex,
    pub interior: Vec<Vertex>,
    pub end: Vertex,
}

impl Thread {
    pub fn len(&self) -> usize {
        self.interior.len()
    }

    pub fn is_empty(&self) -> bool {
        self.interior.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.start == self.end
    }

    /// Same thread read from the other end.
    pub fn reversed(&self) -> Thread {
        let mut interior = self.interior.clone();
        interior.reverse();
        Thread { start: self.end, interior, end: self.start }
    }

    /// The thread oriented so that it starts at `v`. For a thread-cycle the
    /// stored orientation is kept.
    pub fn from_end(&self, v: Vertex) -> Thread {
        if self.start == v {
            self.clone()
        } else {
            debug_assert_eq!(self.end, v);
            self.reversed()
        }
    }

    /// The endpoint that is not `v` (for a thread-cycle, `v` itself).
    pub fn other_end(&self, v: Vertex) -> Vertex {
        if self.start == v {
            self.end
        } else {
            self.start
        }
    }

    /// `start, interior..., end`.
    pub fn path(&self) -> Vec<Vertex> {
        let mut p = Vec::with_capacity(self.len() + 2);
        p.push(self.start);
        p.extend_from_slice(&self.interior);
        p.push(self.end);
        p
    }
}

/// Thread decomposition plus per-vertex incidence indexes.
#[derive(Clone, Debug)]
pub struct ThreadMap {
    pub threads: Vec<Thread>,
    /// For each branch vertex, indices of incident threads, one entry per
    /// incidence (a thread-cycle appears twice).
    incident: Vec<Vec<usize>>,
    /// For each 2-vertex, the index of its thread.
    owner: Vec<Option<usize>>,
    /// Components without any branch vertex.
    pub pure_cycles: Vec<Vec<Vertex>>,
}

impl ThreadMap {
    /// Decomposes a graph with minimum degree at least 2. Components that are
    /// plain cycles are collected in `pure_cycles` instead of failing.
    pub fn build(g: &Graph) -> Result<ThreadMap, ThreadError> {
        if let Some(v) = g.vertices().find(|&v| g.degree(v) < 2) {
            return Err(ThreadError::LowDegree(v));
        }
        let cap = g.capacity();
        let mut threads = Vec::new();
        let mut incident = vec![Vec::new(); cap];
        let mut owner = vec![None; cap];
        for u in g.vertices().filter(|&u| g.degree(u) >= 3) {
            for &first in g.neighbors(u) {
                let mut interior = Vec::new();
                let mut prev = u;
                let mut cur = first;
                while g.degree(cur) == 2 {
                    interior.push(cur);
                    let nb = g.neighbors(cur);
                    let next = if nb[0] == prev { nb[1] } else { nb[0] };
                    prev = cur;
                    cur = next;
                }
                let end = cur;
                // Keep one orientation of each thread.
                let canonical = if interior.is_empty() || u != end {
                    u < end
                } else {
                    interior[0] < interior[interior.len() - 1]
                };
                if !canonical {
                    continue;
                }
                let idx = threads.len();
                for &w in &interior {
                    owner[w] = Some(idx);
                }
                incident[u].push(idx);
                incident[end].push(idx);
                threads.push(Thread { start: u, interior, end });
            }
        }
        let mut pure_cycles = Vec::new();
        if g.vertices().any(|v| g.degree(v) == 2 && owner[v].is_none()) {
            for comp in g.components() {
                if comp.iter().all(|&v| g.degree(v) == 2) {
                    pure_cycles.push(comp);
                }
            }
        }
        for list in incident.iter_mut() {
            list.sort_unstable();
        }
        Ok(ThreadMap { threads, incident, owner, pure_cycles })
    }

    /// Incident threads of a branch vertex, each oriented away from `v`. A
    /// thread-cycle is listed in both directions.
    pub fn threads_at(&self, v: Vertex) -> Vec<Thread> {
        let Some(list) = self.incident.get(v) else {
            return Vec::new();
        };
        let mut out = Vec::with_capacity(list.len());
        let mut i = 0;
        while i < list.len() {
            let t = &self.threads[list[i]];
            if t.is_cycle() {
                out.push(t.clone());
                out.push(t.reversed());
                i += 2;
            } else {
                out.push(t.from_end(v));
                i += 1;
            }
        }
        out
    }

    pub fn thread_of(&self, v: Vertex) -> Option<&Thread> {
        self.owner.get(v).copied().flatten().map(|i| &self.threads[i])
    }

    pub fn is_branch(&self, v: Vertex) -> bool {
        self.incident.get(v).is_some_and(|l| !l.is_empty())
    }

    /// Thread profile of a branch vertex.
    pub fn profile(&self, v: Vertex) -> Result<ThreadProfile, ThreadError> {
        if !self.is_branch(v) {
            return Err(ThreadError::NotBranchVertex(v));
        }
        let mut counts = [0usize; 6];
        let mut t = 0;
        let mut has_thread_cycle = false;
        for th in self.threads_at(v) {
            counts[th.len().min(5)] += 1;
            t += th.len();
            has_thread_cycle |= th.is_cycle();
        }
        Ok(ThreadProfile { owner: v, counts, t, has_thread_cycle })
    }
}

/// `counts[l]` is the number of thread incidences of length `l` at the
/// owner, with `counts[5]` bucketing every length of 5 or more.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreadProfile {
    pub owner: Vertex,
    pub counts: [usize; 6],
    pub t: usize,
    pub has_thread_cycle: bool,
}

impl ThreadProfile {
    pub fn a(&self, l: usize) -> usize {
        self.counts[l.min(5)]
    }

    pub fn degree(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// All threads of `g`. Fails if some component has no branch vertex.
pub fn decompose(g: &Graph) -> Result<Vec<Thread>, ThreadError> {
    let map = ThreadMap::build(g)?;
    if let Some(c) = map.pure_cycles.first() {
        return Err(ThreadError::PureCycleComponent(c.clone()));
    }
    Ok(map.threads)
}

pub fn profile(g: &Graph, x: Vertex) -> Result<ThreadProfile, ThreadError> {
    if g.degree(x) < 3 {
        return Err(ThreadError::NotBranchVertex(x));
    }
    ThreadMap::build(g)?.profile(x)
}

/// Vertices on a common thread with `x` at thread-distance `l + 1`.
pub fn loosely_adjacent(g: &Graph, x: Vertex, l: usize) -> BTreeSet<Vertex> {
    let Ok(map) = ThreadMap::build(g) else {
        return BTreeSet::new();
    };
    loosely_adjacent_in(&map, x, l)
}

pub(crate) fn loosely_adjacent_in(map: &ThreadMap, x: Vertex, l: usize) -> BTreeSet<Vertex> {
    let mut out = BTreeSet::new();
    let walk = |th: &Thread, out: &mut BTreeSet<Vertex>| {
        let path = th.path();
        if let Some(&v) = path.get(l + 1) {
            out.insert(v);
        }
    };
    if map.is_branch(x) {
        for th in map.threads_at(x) {
            walk(&th, &mut out);
        }
    } else if let Some(th) = map.thread_of(x) {
        // From a 2-vertex only the endpoints qualify.
        let path = th.path();
        let pos = path.iter().position(|&v| v == x).unwrap();
        if pos == l + 1 {
            out.insert(th.start);
        }
        if path.len() - 1 - pos == l + 1 {
            out.insert(th.end);
        }
    }
    out
}

/// Boundary edges `(inside, outside)` of a vertex set.
pub type Boundary = Vec<(Vertex, Vertex)>;

fn boundary_of(g: &Graph, inside: &BTreeSet<Vertex>) -> Boundary {
    let mut b = Vec::new();
    for &v in inside {
        for &w in g.neighbors(v) {
            if !inside.contains(&w) {
                b.push((v, w));
            }
        }
    }
    b
}

/// `x` together with every 2-vertex loosely adjacent to it.
pub fn star_vertices(map: &ThreadMap, x: Vertex) -> Result<BTreeSet<Vertex>, ThreadError> {
    let mut set = BTreeSet::from([x]);
    for th in map.threads_at(x) {
        if th.is_cycle() {
            return Err(ThreadError::ThreadCycle(x));
        }
        set.extend(th.interior.iter().copied());
    }
    Ok(set)
}

/// The subdivided star rooted at `x`, with its boundary edges.
pub fn star_subgraph(g: &Graph, x: Vertex) -> Result<(Graph, Boundary), ThreadError> {
    if g.degree(x) < 3 {
        return Err(ThreadError::NotBranchVertex(x));
    }
    let map = ThreadMap::build(g)?;
    let set = star_vertices(&map, x)?;
    Ok((g.induced(&set), boundary_of(g, &set)))
}

/// The 1-thread joining branch vertices `x` and `y`, if any.
pub(crate) fn one_thread_between(map: &ThreadMap, x: Vertex, y: Vertex) -> Option<Thread> {
    map.threads_at(x)
        .into_iter()
        .find(|th| th.len() == 1 && th.end == y && x != y)
}

/// Union of the stars rooted at `x` and `y`, which must be joined by a
/// 1-thread.
pub fn pair_subgraph(g: &Graph, x: Vertex, y: Vertex) -> Result<(Graph, Boundary), ThreadError> {
    for v in [x, y] {
        if g.degree(v) < 3 {
            return Err(ThreadError::NotBranchVertex(v));
        }
    }
    let map = ThreadMap::build(g)?;
    one_thread_between(&map, x, y).ok_or(ThreadError::NotOneThreadPair(x, y))?;
    let mut set = star_vertices(&map, x)?;
    set.extend(star_vertices(&map, y)?);
    Ok((g.induced(&set), boundary_of(g, &set)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{family, FamilyParams};

    fn theta(a: usize, b: usize, c: usize) -> Graph {
        family("theta", &FamilyParams::list(&[a, b, c])).unwrap()
    }

    /// Root 0 with threads of the given lengths, each ending at its own
    /// degree-3 anchor closed off by a triangle-free gadget (a K_{3,3}).
    fn star_host(lengths: &[usize]) -> (Graph, Vertex) {
        let mut g = Graph::empty();
        let mut next = 1;
        for &len in lengths {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next).unwrap();
                prev = next;
                next += 1;
            }
            // anchor: a K_{3,3} so the far end has degree >= 3
            let k: Vec<usize> = (next..next + 6).collect();
            next += 6;
            for i in 0..3 {
                for j in 3..6 {
                    g.add_edge(k[i], k[j]).unwrap();
                }
            }
            g.add_edge(prev, k[0]).unwrap();
        }
        (g, 0)
    }

    #[test]
    fn theta_555_has_three_four_threads() {
        let g = theta(5, 5, 5);
        let ths = decompose(&g).unwrap();
        assert_eq!(ths.len(), 3);
        assert!(ths.iter().all(|t| t.len() == 4 && !t.is_cycle()));
        let p = profile(&g, 1).unwrap();
        assert_eq!(p.a(4), 3);
        assert_eq!(p.t, 12);
        assert_eq!(p.counts.iter().sum::<usize>(), 3);
    }

    #[test]
    fn k4_has_six_zero_threads() {
        let g = family("complete", &FamilyParams::list(&[4])).unwrap();
        let ths = decompose(&g).unwrap();
        assert_eq!(ths.len(), 6);
        assert!(ths.iter().all(|t| t.is_empty()));
        assert!(loosely_adjacent(&g, 0, 1).is_empty());
    }

    #[test]
    fn pendant_cycle_is_a_thread_cycle() {
        // u = 0 on a 9-cycle 0..8, plus a K4 hanging off u so deg(u) = 3... use K_{3,3}
        let mut g = Graph::empty();
        for i in 0..9 {
            g.add_edge(i, (i + 1) % 9).unwrap();
        }
        let k: Vec<usize> = (20..26).collect();
        for i in 0..3 {
            for j in 3..6 {
                g.add_edge(k[i], k[j]).unwrap();
            }
        }
        g.add_edge(0, 20).unwrap();
        let map = ThreadMap::build(&g).unwrap();
        let cyc: Vec<&Thread> = map.threads.iter().filter(|t| t.is_cycle()).collect();
        assert_eq!(cyc.len(), 1);
        assert_eq!((cyc[0].start, cyc[0].end, cyc[0].len()), (0, 0, 8));
        let p = map.profile(0).unwrap();
        assert!(p.has_thread_cycle);
        assert_eq!(p.degree(), 3);
        assert_eq!(p.t, 16);
        assert!(matches!(star_subgraph(&g, 0), Err(ThreadError::ThreadCycle(0))));
    }

    #[test]
    fn profiles_of_bad_shapes() {
        let (g, x) = star_host(&[2, 1, 1]);
        let p = profile(&g, x).unwrap();
        assert_eq!((p.a(2), p.a(1), p.a(0)), (1, 2, 0));
        assert_eq!(p.t, 4);
        let (g, x) = star_host(&[4, 1, 1]);
        let p = profile(&g, x).unwrap();
        assert_eq!((p.a(4), p.a(2), p.a(1), p.a(0)), (1, 0, 2, 0));
        assert_eq!(p.t, 6);
        assert!(matches!(profile(&g, 1), Err(ThreadError::NotBranchVertex(1))));
    }

    #[test]
    fn loose_adjacency_unrolls_the_definition() {
        let (g, x) = star_host(&[1, 1, 1]);
        assert!(loosely_adjacent(&g, x, 0).contains(&1));
        let near = loosely_adjacent(&g, x, 0);
        assert_eq!(near.len(), 3);
        let far = loosely_adjacent(&g, x, 1);
        assert_eq!(far.len(), 3);
        assert!(far.iter().all(|&v| g.degree(v) >= 3));
    }

    #[test]
    fn theta_distance_four_vertices_sit_next_to_the_other_branch_vertex() {
        let g = theta(5, 5, 5);
        let got = loosely_adjacent(&g, 1, 3);
        assert_eq!(got.len(), 3);
        for v in got {
            assert!(g.has_edge(v, 2));
        }
    }

    #[test]
    fn star_orders() {
        let (g, x) = star_host(&[4, 2, 2]);
        let (s, b) = star_subgraph(&g, x).unwrap();
        assert_eq!(s.order(), 9);
        assert_eq!(b.len(), 3);
        let g = theta(5, 5, 5);
        let (s, b) = star_subgraph(&g, 1).unwrap();
        assert_eq!(s.order(), 13);
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|&(_, out)| out == 2));
        let (g, x) = star_host(&[0, 0, 0]);
        let (s, b) = star_subgraph(&g, x).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(b.len(), 3);
    }

    #[test]
    fn pair_subgraph_orders() {
        // two 3-vertices joined by a 1-thread, each with two 0-threads
        let (mut g, x) = star_host(&[0, 0]);
        let (h, y) = star_host(&[0, 0]);
        let off = 100;
        for (u, v) in h.edges() {
            g.add_edge(u + off, v + off).unwrap();
        }
        g.add_edge(x, 99).unwrap();
        g.add_edge(99, y + off).unwrap();
        let (s, _) = pair_subgraph(&g, x, y + off).unwrap();
        assert_eq!(s.order(), 3);
        let g2 = theta(3, 3, 3);
        assert!(matches!(pair_subgraph(&g2, 1, 2), Err(ThreadError::NotOneThreadPair(1, 2))));
    }
}
