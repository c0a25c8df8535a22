//! Exhaustive search used as ground truth at small sizes.
//!
//! Every search refuses graphs above a vertex cap (24 unless the
//! `EQUICOLOR_ORACLE_CAP` environment variable says otherwise) instead of
//! giving an approximate answer.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, Coloring, ListAssignment};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_CAP: usize = 24;
pub const CAP_ENV: &str = "EQUICOLOR_ORACLE_CAP";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {order} vertices, above the oracle cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("the number of colors must be positive")]
    NoColors,
}

/// Result of one search together with the number of nodes it visited.
#[derive(Clone, Debug)]
pub struct Search {
    pub witness: Option<Coloring>,
    pub nodes: u64,
}

impl Search {
    pub fn feasible(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdResult {
    pub chi_eq: usize,
    pub chi_eq_star: usize,
    pub per_k: BTreeMap<usize, bool>,
}

/// Exhaustive solvers sharing one size cap.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::from_env()
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap }
    }

    /// Cap from `EQUICOLOR_ORACLE_CAP`, falling back to [`DEFAULT_CAP`].
    pub fn from_env() -> Self {
        let cap = std::env::var(CAP_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_CAP);
        Oracle { cap }
    }

    fn admit(&self, g: &Graph) -> Result<(), OracleError> {
        if g.order() > self.cap {
            return Err(OracleError::TooLarge { order: g.order(), cap: self.cap });
        }
        Ok(())
    }

    /// Searches for an equitable `m`-coloring of `g`.
    pub fn equitable(&self, g: &Graph, m: usize) -> Result<Search, OracleError> {
        self.admit(g)?;
        if m == 0 {
            return Err(OracleError::NoColors);
        }
        let n = g.order();
        let (q, r) = (n / m, n % m);
        let caps = Caps::Equitable { q, r };
        let domains = vec![(1..=m).collect::<Vec<Color>>(); n];
        Ok(Searcher::new(g, m, caps, domains, true).run())
    }

    /// Feasibility of every color count from 1 to `|V|`.
    pub fn threshold(&self, g: &Graph) -> Result<ThresholdResult, OracleError> {
        self.admit(g)?;
        let n = g.order();
        let mut per_k = BTreeMap::new();
        for k in 1..=n {
            // k >= n: all vertices get distinct colors.
            let ok = k >= n || self.equitable(g, k)?.feasible();
            per_k.insert(k, ok);
        }
        let chi_eq = per_k.iter().find(|(_, &ok)| ok).map(|(&k, _)| k).unwrap_or(n.max(1));
        let chi_eq_star = per_k.iter().rev().take_while(|(_, &ok)| ok).last().map(|(&k, _)| k).unwrap_or(n.max(1));
        Ok(ThresholdResult { chi_eq, chi_eq_star, per_k })
    }

    /// Searches for a proper `L`-coloring of `h` with colors `1..=m` whose
    /// class sizes satisfy `|V_1| >= ... >= |V_m| >= |V_1| - 1`.
    pub fn descending_l(&self, h: &Graph, lists: &ListAssignment, m: usize) -> Result<Search, OracleError> {
        self.admit(h)?;
        if m == 0 {
            return Err(OracleError::NoColors);
        }
        let n = h.order();
        let (q, r) = (n / m, n % m);
        let order = degeneracy_order(h);
        let domains = order
            .iter()
            .map(|&v| lists.lists.get(&v).map(|l| l.iter().copied().filter(|&c| (1..=m).contains(&c)).collect()).unwrap_or_default())
            .collect();
        Ok(Searcher::with_order(h, m, Caps::Descending { q, r }, domains, false, order).run())
    }
}

/// Equitable `m`-coloring of `g` by exhaustive search, `None` if none exists.
pub fn brute_equitable(g: &Graph, m: usize) -> Result<Option<Coloring>, OracleError> {
    Oracle::from_env().equitable(g, m).map(|s| s.witness)
}

/// Equitable chromatic number and threshold of `g`.
pub fn brute_threshold(g: &Graph) -> Result<ThresholdResult, OracleError> {
    Oracle::from_env().threshold(g)
}

/// Descending-equitable `L`-coloring of `h` with colors `1..=m`, `None` if
/// none exists.
pub fn brute_descending_l(h: &Graph, lists: &ListAssignment, m: usize) -> Result<Option<Coloring>, OracleError> {
    Oracle::from_env().descending_l(h, lists, m).map(|s| s.witness)
}

/// Reverse smallest-last order: each vertex has at most degeneracy-many
/// neighbors after it.
fn degeneracy_order(g: &Graph) -> Vec<Vertex> {
    let mut deg: BTreeMap<Vertex, usize> = g.vertices().map(|v| (v, g.degree(v))).collect();
    let mut alive: BTreeSet<(usize, Vertex)> = deg.iter().map(|(&v, &d)| (d, v)).collect();
    let mut removed = Vec::with_capacity(g.order());
    while let Some((_, v)) = alive.pop_first() {
        removed.push(v);
        deg.remove(&v);
        for &w in g.neighbors(v) {
            if let Some(d) = deg.get_mut(&w) {
                alive.remove(&(*d, w));
                *d -= 1;
                alive.insert((*d, w));
            }
        }
    }
    removed.reverse();
    removed
}

#[derive(Clone, Copy)]
enum Caps {
    /// Any `r` classes may hold `q + 1` vertices, the rest exactly `q`.
    Equitable { q: usize, r: usize },
    /// Classes `1..=r` hold `q + 1` vertices and the rest exactly `q`.
    Descending { q: usize, r: usize },
}

struct Searcher {
    m: usize,
    caps: Caps,
    order: Vec<Vertex>,
    domains: Vec<Vec<Color>>,
    /// For each position, positions of earlier neighbors.
    back: Vec<Vec<usize>>,
    symmetric: bool,
    assign: Vec<Color>,
    sizes: Vec<usize>,
    full: usize,
    nodes: u64,
}

impl Searcher {
    fn new(g: &Graph, m: usize, caps: Caps, domains: Vec<Vec<Color>>, symmetric: bool) -> Self {
        let order = degeneracy_order(g);
        Self::with_order(g, m, caps, domains, symmetric, order)
    }

    fn with_order(g: &Graph, m: usize, caps: Caps, domains: Vec<Vec<Color>>, symmetric: bool, order: Vec<Vertex>) -> Self {
        let pos: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let back = order.iter().enumerate().map(|(i, &v)| g.neighbors(v).iter().map(|w| pos[w]).filter(|&j| j < i).collect()).collect();
        Searcher {
            m,
            caps,
            assign: vec![0; order.len()],
            order,
            domains,
            back,
            symmetric,
            sizes: vec![0; m + 1],
            full: 0,
            nodes: 0,
        }
    }

    fn run(mut self) -> Search {
        let found = self.go(0, 0);
        let witness = found.then(|| {
            let mut f = Coloring::new(self.m).expect("m is positive");
            for (i, &v) in self.order.iter().enumerate() {
                f.set(v, self.assign[i]);
            }
            f
        });
        Search { witness, nodes: self.nodes }
    }

    fn cap_of(&self, c: Color) -> usize {
        match self.caps {
            Caps::Equitable { q, r } => {
                if self.full < r {
                    q + 1
                } else {
                    q
                }
            }
            Caps::Descending { q, r } => q + usize::from(c <= r),
        }
    }

    /// Vertices still needed to bring every class to its floor.
    fn deficit(&self) -> usize {
        let q = match self.caps {
            Caps::Equitable { q, .. } => q,
            Caps::Descending { q, .. } => q,
        };
        let mut need: usize = (1..=self.m).map(|c| q.saturating_sub(self.sizes[c])).sum();
        if let Caps::Descending { q, r } = self.caps {
            need += (1..=r).filter(|&c| self.sizes[c] < q + 1).count();
        }
        need
    }

    fn go(&mut self, i: usize, used: usize) -> bool {
        self.nodes += 1;
        let remaining = self.order.len() - i;
        if self.deficit() > remaining {
            return false;
        }
        if i == self.order.len() {
            return true;
        }
        let q = match self.caps {
            Caps::Equitable { q, .. } | Caps::Descending { q, .. } => q,
        };
        for k in 0..self.domains[i].len() {
            let c = self.domains[i][k];
            if self.symmetric && c > used + 1 {
                break;
            }
            if self.sizes[c] >= self.cap_of(c) || self.back[i].iter().any(|&j| self.assign[j] == c) {
                continue;
            }
            self.assign[i] = c;
            self.sizes[c] += 1;
            let grew = self.sizes[c] == q + 1;
            if grew {
                self.full += 1;
            }
            if self.go(i + 1, used.max(c)) {
                return true;
            }
            if grew {
                self.full -= 1;
            }
            self.sizes[c] -= 1;
            self.assign[i] = 0;
        }
        false
    }
}
