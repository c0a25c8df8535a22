//! Simple undirected graphs with stable vertex identifiers.
//!
//! Identifiers are plain `usize` values. A graph owns an id space `0..capacity`
//! in which some slots are present; deleting vertices clears slots but never
//! renumbers the survivors, so colorings and thread labels computed on a
//! subgraph line up with the host graph.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid edge {0}-{1}: self-loops are not allowed")]
    InvalidEdge(Vertex, Vertex),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("graph is empty")]
    EmptyGraph,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    present: Vec<bool>,
    order: usize,
    size: usize,
}

impl Graph {
    /// A graph with no vertices.
    pub fn empty() -> Self {
        Self::default()
    }

    /// A graph whose vertices are exactly `ids`, with no edges.
    pub fn with_vertices<I: IntoIterator<Item = Vertex>>(ids: I) -> Self {
        let mut g = Graph::empty();
        for v in ids {
            g.add_vertex(v);
        }
        g
    }

    /// Builds a simple graph from an edge list; vertices are the union of
    /// `ids` and all edge endpoints. Duplicate edges collapse.
    pub fn from_edges<I>(ids: impl IntoIterator<Item = Vertex>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::with_vertices(ids);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        if v >= self.adj.len() {
            self.adj.resize_with(v + 1, Vec::new);
            self.present.resize(v + 1, false);
        }
        if !self.present[v] {
            self.present[v] = true;
            self.order += 1;
        }
    }

    /// Adds `uv`, creating missing endpoints. Returns `false` if the edge was
    /// already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::InvalidEdge(u, v));
        }
        self.add_vertex(u);
        self.add_vertex(v);
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.size += 1;
                Ok(true)
            }
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if !self.contains(u) || !self.contains(v) {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(pos);
                self.size -= 1;
                true
            }
            Err(_) => false,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    /// One past the largest identifier ever used.
    pub fn capacity(&self) -> usize {
        self.adj.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.present.len() && self.present[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter_map(|(v, &p)| p.then_some(v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Sorted neighbor list. Panics if `v` is not present.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        assert!(self.contains(v), "vertex {v} not in graph");
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.contains(v) && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.adj[v].len()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.adj[v].len()).max()
    }

    /// `G - S`. The input is left untouched and surviving ids are preserved.
    pub fn delete_vertices(&self, set: &BTreeSet<Vertex>) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.remove_vertices(set.iter().copied())?;
        Ok(g)
    }

    /// In-place deletion, used by the solver's working copy.
    pub(crate) fn remove_vertices<I: IntoIterator<Item = Vertex>>(&mut self, set: I) -> Result<(), GraphError> {
        let set: Vec<Vertex> = set.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&v| !self.contains(v)) {
            return Err(GraphError::UnknownVertex(bad));
        }
        for &v in &set {
            if !self.present[v] {
                continue;
            }
            let nbrs = std::mem::take(&mut self.adj[v]);
            for u in nbrs {
                let pos = self.adj[u].binary_search(&v).unwrap();
                self.adj[u].remove(pos);
                self.size -= 1;
            }
            self.present[v] = false;
            self.order -= 1;
        }
        Ok(())
    }

    /// Subgraph induced on `keep` (ids outside the graph are ignored).
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let mut g = Graph::with_vertices(keep.iter().copied().filter(|&v| self.contains(v)));
        for &u in keep {
            if !self.contains(u) {
                continue;
            }
            for &v in &self.adj[u] {
                if u < v && keep.contains(&v) {
                    g.add_edge(u, v).expect("no loops in a simple graph");
                }
            }
        }
        g
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.capacity()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Shortest-path distances from `s`, `None` for unreachable ids.
    pub fn bfs_distances(&self, s: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.capacity()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}
