//! The reduction loop: repeatedly find a reducible configuration, delete it,
//! and once the remainder is trivial, extend back through the recorded
//! configurations in reverse order.

mod config;
mod extend;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

pub use config::{Config, ConfigKind, Mode, Step};

use crate::coloring::{merge_equitable, Coloring, ColoringError};
use crate::graph::{Graph, GraphError, Vertex};
use crate::lemmas::LemmaError;
use crate::metrics::{fmt_rational, girth, mad_exact, Girth, Rational};
use crate::threads::{ThreadError, ThreadMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("no reducible configuration found in a graph of order {order}")]
    NoConfigFound { order: usize },
    #[error("extension of {kind:?} failed: {source}")]
    ExtensionFailed { kind: ConfigKind, source: LemmaError },
    #[error("invariant broken: {0}")]
    InvariantBroken(String),
    #[error("no equitable coloring exists: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Thread(#[from] ThreadError),
}

#[derive(Clone, Debug, Default)]
pub struct SolverOptions {
    /// Re-check minimum degree and girth on every intermediate graph and
    /// the full coloring after every extension.
    pub check_invariants: bool,
    /// Skip the girth and maximum average degree hypotheses.
    pub unchecked: bool,
    /// Record the configuration sequence.
    pub trace: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceEntry {
    pub kind: ConfigKind,
    pub order_before: usize,
    pub deletion_set: BTreeSet<Vertex>,
    pub anchors: BTreeSet<Vertex>,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub coloring: Coloring,
    pub trace: Vec<TraceEntry>,
}

fn mode_for(m: usize) -> Mode {
    if m >= 4 {
        Mode::M4
    } else {
        Mode::M3
    }
}

fn check_hypotheses(g: &Graph, m: usize, unchecked: bool) -> Result<Option<Girth>, SolverError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < 2) {
        return Err(SolverError::HypothesisViolation(format!("minimum degree: vertex {v} has degree {}", g.degree(v))));
    }
    if m < 3 {
        return Err(SolverError::HypothesisViolation(format!("at least 3 colors are needed, got {m}")));
    }
    if unchecked {
        return Ok(None);
    }
    let (need_girth, bound) = if m >= 4 { (10, Rational::new(5, 2)) } else { (14, Rational::new(7, 3)) };
    let gr = girth(g);
    if !gr.at_least(need_girth) {
        return Err(SolverError::HypothesisViolation(format!("girth {gr} is below {need_girth}")));
    }
    let mad = mad_exact(g)?;
    if mad >= bound {
        return Err(SolverError::HypothesisViolation(format!(
            "maximum average degree {} is not below {}",
            fmt_rational(&mad),
            fmt_rational(&bound)
        )));
    }
    Ok(Some(gr))
}

/// Equitable `m`-coloring of `g` (see [`equitable_color_with`]).
pub fn equitable_color(g: &Graph, m: usize) -> Result<Coloring, SolverError> {
    equitable_color_with(g, m, &SolverOptions::default()).map(|s| s.coloring)
}

/// Colors `g` equitably with `m` colors. Needs minimum degree 2 and either
/// `m >= 4`, girth at least 10 and maximum average degree below 5/2, or
/// `m = 3`, girth at least 14 and maximum average degree below 7/3.
pub fn equitable_color_with(g: &Graph, m: usize, opts: &SolverOptions) -> Result<Solution, SolverError> {
    if m == 0 {
        return Err(ColoringError::InvalidColorCount(0).into());
    }
    if g.order() <= m {
        return Ok(Solution { coloring: distinct(g, m)?, trace: Vec::new() });
    }
    let input_girth = check_hypotheses(g, m, opts.unchecked)?;
    let mode = mode_for(m);

    let mut work = g.clone();
    let mut stack: Vec<Config> = Vec::new();
    let mut trace = Vec::new();
    let base = loop {
        if work.order() <= m {
            break distinct(&work, m)?;
        }
        let map = ThreadMap::build(&work)?;
        if work.vertices().all(|v| !map.is_branch(v)) {
            break color_cycles(&work, &map.pure_cycles, m)?;
        }
        let cfg = config::scan(&work, &map, m, mode, true)
            .pop()
            .ok_or(SolverError::NoConfigFound { order: work.order() })?;
        if opts.trace {
            trace.push(TraceEntry {
                kind: cfg.kind,
                order_before: work.order(),
                deletion_set: cfg.deletion_set.clone(),
                anchors: cfg.anchors(),
            });
        }
        work.remove_vertices(cfg.deletion_set.iter().copied())?;
        if opts.check_invariants {
            if let Some(v) = work.vertices().find(|&v| work.degree(v) < 2) {
                return Err(SolverError::InvariantBroken(format!("vertex {v} dropped below degree 2")));
            }
            if let Some(gr) = input_girth {
                if girth(&work) < gr {
                    return Err(SolverError::InvariantBroken("girth decreased".into()));
                }
            }
        }
        stack.push(cfg);
    };

    let mut f = base;
    while let Some(cfg) = stack.pop() {
        extend::apply(g, &mut f, &cfg).map_err(|source| SolverError::ExtensionFailed { kind: cfg.kind, source })?;
        check_step(g, &f, &cfg)?;
    }
    if opts.check_invariants {
        let report = crate::coloring::verify_equitable(g, &f)?;
        if !report.valid {
            return Err(SolverError::InvariantBroken(format!("{:?}", report.violations)));
        }
    }
    Ok(Solution { coloring: f, trace })
}

/// Properness around the newly colored vertices plus balance of the whole.
fn check_step(g: &Graph, f: &Coloring, cfg: &Config) -> Result<(), SolverError> {
    let fail = |msg: String| SolverError::ExtensionFailed { kind: cfg.kind, source: LemmaError::ConstructionFailed(msg) };
    for &v in &cfg.deletion_set {
        let c = f.get(v).ok_or_else(|| fail(format!("vertex {v} left uncolored")))?;
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| f.get(w) == Some(c)) {
            return Err(fail(format!("edge {v}-{w} is monochromatic")));
        }
    }
    if !f.is_balanced() {
        return Err(fail(format!("class sizes {:?} are not balanced", f.class_sizes())));
    }
    Ok(())
}

fn distinct(g: &Graph, m: usize) -> Result<Coloring, SolverError> {
    let mut f = Coloring::new(m)?;
    for (i, v) in g.vertices().enumerate() {
        f.set(v, i + 1);
    }
    Ok(f)
}

fn color_cycles(g: &Graph, cycles: &[Vec<Vertex>], m: usize) -> Result<Coloring, SolverError> {
    let mut f = Coloring::new(m)?;
    for comp in cycles {
        f = merge_equitable(&f, &cycle_on(&cyclic_order(g, comp), m)?)?;
    }
    Ok(f)
}

/// Cyclic order of a component in which every vertex has degree 2, given
/// as the vertex list of the component.
fn cyclic_order(g: &Graph, comp: &[Vertex]) -> Vec<Vertex> {
    let mut order = vec![comp[0]];
    let mut prev = comp[0];
    let mut cur = g.neighbors(comp[0])[0];
    while cur != comp[0] {
        order.push(cur);
        let nb = g.neighbors(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    order
}

/// Colors `order` (consecutive vertices adjacent, last adjacent to first).
fn cycle_on(order: &[Vertex], m: usize) -> Result<Coloring, SolverError> {
    let n = order.len();
    if n < 3 {
        return Err(SolverError::Infeasible(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let mut f = Coloring::new(m)?;
    let seq: Vec<usize> = match m {
        1 => return Err(SolverError::Infeasible("one color cannot color an edge".into())),
        2 if n % 2 == 1 => return Err(SolverError::Infeasible(format!("odd cycle of length {n} with 2 colors"))),
        _ => {
            let mut s: Vec<usize> = (0..n).map(|i| i % m + 1).collect();
            if m >= 3 && n % m == 1 {
                s.swap(n - 2, n - 1);
            }
            s
        }
    };
    for (&v, &c) in order.iter().zip(&seq) {
        f.set(v, c);
    }
    Ok(f)
}

/// Equitable `m`-coloring of the cycle on vertices `1..=n`.
pub fn color_cycle(n: usize, m: usize) -> Result<Coloring, SolverError> {
    let order: Vec<Vertex> = (1..=n).collect();
    cycle_on(&order, m)
}

/// The smallest number of colors the covered range guarantees for every
/// larger count too: 3 for girth at least 14 with maximum average degree
/// below 7/3, 4 for girth at least 10 with maximum average degree below
/// 5/2, `None` otherwise.
pub fn upper_threshold(g: &Graph) -> Result<Option<usize>, SolverError> {
    if g.is_empty() || g.vertices().any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    let gr = girth(g);
    let mad = mad_exact(g)?;
    Ok(if gr.at_least(14) && mad < Rational::new(7, 3) {
        Some(3)
    } else if gr.at_least(10) && mad < Rational::new(5, 2) {
        Some(4)
    } else {
        None
    })
}

/// The first admissible configuration in priority order.
pub fn find_config(g: &Graph, m: usize) -> Result<Config, SolverError> {
    let map = ThreadMap::build(g)?;
    config::scan(g, &map, m, mode_for(m), true).pop().ok_or(SolverError::NoConfigFound { order: g.order() })
}

/// Every admissible configuration, in priority order.
pub fn all_configs(g: &Graph, m: usize) -> Result<Vec<Config>, SolverError> {
    let map = ThreadMap::build(g)?;
    Ok(config::scan(g, &map, m, mode_for(m), false))
}

/// Replays `cfg` on a coloring of `g` minus its deletion set.
pub fn extend_config(g: &Graph, cfg: &Config, f: &Coloring) -> Result<Coloring, SolverError> {
    let mut out = f.clone();
    extend::apply(g, &mut out, cfg).map_err(|source| SolverError::ExtensionFailed { kind: cfg.kind, source })?;
    check_step(g, &out, cfg)?;
    Ok(out)
}
