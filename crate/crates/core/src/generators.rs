//! Test corpora: named families, random sparse high-girth graphs and frozen
//! gadget fixtures.

use std::collections::{BTreeMap, VecDeque};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::dimacs::load_graph;
use crate::graph::{Graph, GraphError, Vertex};
use crate::metrics::{girth, mad_exact, Rational};
use crate::solver::ConfigKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("no graph met the constraints after {0} attempts")]
    GenerationFailed(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Integer parameters of a named family, e.g. `5,5,5` for a theta graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub values: Vec<usize>,
}

impl FamilyParams {
    pub fn list(values: &[usize]) -> Self {
        FamilyParams { values: values.to_vec() }
    }

    fn expect(&self, family: &str, n: usize) -> Result<&[usize], GenError> {
        if self.values.len() != n {
            return Err(GenError::BadParams(format!(
                "{family} takes {n} parameter(s), got {}",
                self.values.len()
            )));
        }
        Ok(&self.values)
    }
}

impl FromStr for FamilyParams {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, GenError> {
        let values = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|_| GenError::BadParams(format!("not an integer: `{t}`"))))
            .collect::<Result<_, _>>()?;
        Ok(FamilyParams { values })
    }
}

fn path_between(g: &mut Graph, a: Vertex, b: Vertex, edges: usize, next: &mut Vertex) -> Result<(), GenError> {
    if edges == 0 {
        return Err(GenError::BadParams("path lengths must be positive".into()));
    }
    let mut prev = a;
    for _ in 1..edges {
        g.add_edge(prev, *next)?;
        prev = *next;
        *next += 1;
    }
    g.add_edge(prev, b)?;
    Ok(())
}

fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenError> {
    let mut g = Graph::with_vertices(1..=a + b);
    for i in 1..=a {
        for j in a + 1..=a + b {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

/// Named graph families. Vertex ids start at 1.
///
/// | name | params | graph |
/// |---|---|---|
/// | `cycle` | n | C_n |
/// | `theta` | a,b,c | two branch vertices (ids 1, 2) joined by paths with a, b, c edges |
/// | `star` | n | K_{1,n} |
/// | `k2n` | n | K_{2,n} |
/// | `kab` | a,b | K_{a,b} |
/// | `petersen` | | Petersen graph |
/// | `complete` | n | K_n |
/// | `subdivided` | n,q | K_n with every edge subdivided q times |
pub fn family(name: &str, params: &FamilyParams) -> Result<Graph, GenError> {
    match name {
        "cycle" => {
            let n = params.expect(name, 1)?[0];
            if n < 3 {
                return Err(GenError::BadParams("a cycle needs at least 3 vertices".into()));
            }
            Ok(Graph::from_edges(1..=n, (1..=n).map(|i| (i, i % n + 1)))?)
        }
        "theta" => {
            let p = params.expect(name, 3)?;
            if p.iter().filter(|&&l| l == 1).count() > 1 {
                return Err(GenError::BadParams("at most one path may be a single edge".into()));
            }
            let mut g = Graph::with_vertices([1, 2]);
            let mut next = 3;
            for &l in p {
                path_between(&mut g, 1, 2, l, &mut next)?;
            }
            Ok(g)
        }
        "star" => complete_bipartite(1, params.expect(name, 1)?[0]),
        "k2n" => complete_bipartite(2, params.expect(name, 1)?[0]),
        "kab" => {
            let p = params.expect(name, 2)?;
            complete_bipartite(p[0], p[1])
        }
        "petersen" => {
            params.expect(name, 0)?;
            let mut g = Graph::with_vertices(1..=10);
            for i in 0..5 {
                g.add_edge(1 + i, 1 + (i + 1) % 5)?;
                g.add_edge(1 + i, 6 + i)?;
                g.add_edge(6 + i, 6 + (i + 2) % 5)?;
            }
            Ok(g)
        }
        "complete" => {
            let n = params.expect(name, 1)?[0];
            Ok(Graph::from_edges(1..=n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))?)
        }
        "subdivided" => {
            let p = params.expect(name, 2)?;
            let base = family("complete", &FamilyParams::list(&p[..1]))?;
            Ok(subdivide(&base, |_| p[1]))
        }
        other => Err(GenError::UnknownFamily(other.to_string())),
    }
}

/// Replaces every edge `uv` by a path with `q(u, v)` interior vertices. New
/// vertices get fresh ids above the current id space.
pub fn subdivide(g: &Graph, mut q: impl FnMut((Vertex, Vertex)) -> usize) -> Graph {
    let mut out = Graph::with_vertices(g.vertices());
    let mut next = g.capacity().max(1);
    for e in g.edges() {
        let k = q(e);
        if k == 0 {
            out.add_edge(e.0, e.1).expect("simple input");
        } else {
            path_between(&mut out, e.0, e.1, k + 1, &mut next).expect("simple input");
        }
    }
    out
}

/// Renumbers vertices to `1..=n` preserving their order.
pub fn compact(g: &Graph) -> Graph {
    let index: BTreeMap<Vertex, Vertex> = g.vertices().enumerate().map(|(i, v)| (v, i + 1)).collect();
    Graph::from_edges(1..=g.order(), g.edges().map(|(u, v)| (index[&u], index[&v]))).expect("simple input")
}

/// Parameters of [`random_sparse`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    /// Vertices of the base graph before subdivision.
    pub base_size: usize,
    /// Allowed numbers of subdivision vertices per base edge.
    pub subdivisions: Vec<usize>,
    /// Chords are only added when they close no base cycle shorter than this.
    pub base_girth: usize,
    pub max_degree: usize,
    pub girth_min: usize,
    pub mad_max: Rational,
    pub seed: u64,
    pub attempts: usize,
}

impl GenSpec {
    /// Defaults for a girth bound: `mad < 5/2` below girth 14, `mad < 7/3`
    /// from 14 on.
    pub fn new(base_size: usize, subdivisions: Vec<usize>, girth_min: usize, seed: u64) -> Self {
        let q_min = subdivisions.iter().copied().min().unwrap_or(0);
        let base_girth = girth_min.div_ceil(q_min + 1).max(3);
        let mad_max = if girth_min >= 14 { Rational::new(7, 3) } else { Rational::new(5, 2) };
        GenSpec { base_size, subdivisions, base_girth, max_degree: 3, girth_min, mad_max, seed, attempts: 50 }
    }

    /// Parses `n0=8,q=3..5,girth=10,seed=42` (optional keys: `base_girth`,
    /// `maxdeg`, `mad=p/q`, `attempts`; `q` also accepts `1|2|4`).
    pub fn parse(text: &str) -> Result<GenSpec, GenError> {
        let mut kv = BTreeMap::new();
        for part in text.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| GenError::BadParams(format!("expected key=value, got `{part}`")))?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let num = |k: &str| -> Result<Option<usize>, GenError> {
            kv.get(k)
                .map(|v| v.parse::<usize>().map_err(|_| GenError::BadParams(format!("{k}: not an integer `{v}`"))))
                .transpose()
        };
        let n0 = num("n0")?.ok_or_else(|| GenError::BadParams("missing n0".into()))?;
        let girth_min = num("girth")?.unwrap_or(10);
        let seed = num("seed")?.unwrap_or(0) as u64;
        let subdivisions = match kv.get("q") {
            None => vec![1, 2],
            Some(q) => parse_choices(q)?,
        };
        let mut spec = GenSpec::new(n0, subdivisions, girth_min, seed);
        if let Some(b) = num("base_girth")? {
            spec.base_girth = b;
        }
        if let Some(d) = num("maxdeg")? {
            spec.max_degree = d;
        }
        if let Some(a) = num("attempts")? {
            spec.attempts = a;
        }
        if let Some(m) = kv.get("mad") {
            let (p, q) = m
                .split_once('/')
                .ok_or_else(|| GenError::BadParams(format!("mad must be p/q, got `{m}`")))?;
            let p: i64 = p.parse().map_err(|_| GenError::BadParams(format!("bad mad `{m}`")))?;
            let q: i64 = q.parse().map_err(|_| GenError::BadParams(format!("bad mad `{m}`")))?;
            if q == 0 {
                return Err(GenError::BadParams("mad denominator is zero".into()));
            }
            spec.mad_max = Rational::new(p, q);
        }
        Ok(spec)
    }
}

fn parse_choices(q: &str) -> Result<Vec<usize>, GenError> {
    let bad = || GenError::BadParams(format!("bad subdivision range `{q}`"));
    if let Some((a, b)) = q.split_once("..") {
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.trim_start_matches('=').parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    q.split('|').map(|t| t.parse().map_err(|_| bad())).collect()
}

/// Whether `t` lies within distance `limit` of `s`.
fn within(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> bool {
    let mut dist = BTreeMap::from([(s, 0usize)]);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        if u == t {
            return true;
        }
        if d == limit {
            continue;
        }
        for &w in g.neighbors(u) {
            if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(d + 1);
                queue.push_back(w);
            }
        }
    }
    false
}

fn random_base(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Graph {
    let n = spec.base_size;
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::with_vertices(0..n);
    for i in 0..n {
        g.add_edge(order[i], order[(i + 1) % n]).expect("distinct");
    }
    for _ in 0..8 * n {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || g.degree(u) >= spec.max_degree || g.degree(v) >= spec.max_degree || g.has_edge(u, v) {
            continue;
        }
        // The new edge closes a cycle of length dist(u, v) + 1.
        if within(&g, u, v, spec.base_girth.saturating_sub(2)) {
            continue;
        }
        g.add_edge(u, v).expect("distinct");
    }
    g
}

/// A random connected subcubic (or `max_degree`-bounded) base graph built on
/// a Hamiltonian cycle, with every edge subdivided by a number drawn from
/// `spec.subdivisions`. The result is rechecked for girth, `mad` and
/// minimum degree and regenerated on failure. Deterministic in `seed`.
pub fn random_sparse(spec: &GenSpec) -> Result<Graph, GenError> {
    if spec.base_size < 3 || spec.subdivisions.is_empty() || spec.max_degree < 2 {
        return Err(GenError::BadParams("need base_size >= 3, a subdivision choice and max_degree >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..spec.attempts.max(1) {
        let base = random_base(spec, &mut rng);
        let g = compact(&subdivide(&base, |_| *spec.subdivisions.choose(&mut rng).unwrap()));
        let ok = g.min_degree().unwrap_or(0) >= 2
            && girth(&g).at_least(spec.girth_min)
            && mad_exact(&g)? < spec.mad_max;
        if ok {
            return Ok(g);
        }
    }
    Err(GenError::GenerationFailed(spec.attempts.max(1)))
}

macro_rules! fixture {
    ($name:literal, $kind:ident, $m:literal) => {
        ($name, ConfigKind::$kind, $m, include_str!(concat!("../fixtures/gadgets/", $name, ".col")))
    };
}

const GADGETS: [(&str, ConfigKind, usize, &str); 12] = [
    fixture!("equal_endpoint_thread", EqualEndpointThread, 4),
    fixture!("equal_endpoint_open_path", EqualEndpointThread, 4),
    fixture!("equal_endpoint_thread_m3", EqualEndpointThread, 3),
    fixture!("long_thread", LongThread, 4),
    fixture!("four_vertex_overload", FourVertexOverload, 4),
    fixture!("three_vertex_overload", ThreeVertexOverload, 4),
    fixture!("bad_neighborhood", BadNeighborhood, 4),
    fixture!("bad_neighborhood_degree4", BadNeighborhood, 4),
    fixture!("m3_long_thread", M3LongThread, 3),
    fixture!("m3_star_violation", M3StarViolation, 3),
    fixture!("m3_bad_pair_thread", M3BadPairThread, 3),
    fixture!("m3_double_bad", M3DoubleBad, 3),
];

/// A frozen host graph together with the configuration it exhibits first
/// and the number of colors under which it does.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub name: &'static str,
    pub kind: ConfigKind,
    pub colors: usize,
    pub graph: Graph,
}

/// The first frozen host graph whose first detected configuration is `kind`.
pub fn gadget(kind: ConfigKind) -> Graph {
    all_gadgets().into_iter().find(|g| g.kind == kind).expect("every kind has a fixture").graph
}

/// Every frozen gadget; some kinds have several.
pub fn all_gadgets() -> Vec<Gadget> {
    GADGETS
        .iter()
        .map(|&(name, kind, colors, text)| Gadget { name, kind, colors, graph: load_graph(text).expect("fixtures parse") })
        .collect()
}
