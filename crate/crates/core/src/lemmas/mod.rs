//! Extension procedures. Each one takes an equitable coloring of a graph with
//! a few vertices removed and colors those vertices so that the result is
//! again equitable.
//!
//! Every procedure comes in two layers: a pure function over ranks (the
//! boundary colors expressed through [`Ranking`]) and a wrapper that reads
//! the boundary from a host graph and writes into a [`Coloring`]. Neighbors
//! the coloring leaves uncolored are treated as absent, so the host may be a
//! supergraph of the graph actually being colored.

mod double_bad;
mod paths;
mod star;

use thiserror::Error;

use crate::coloring::{Color, Coloring, Ranking};
use crate::graph::{Graph, Vertex};

pub use double_bad::{color_bad_pair_m3, DoubleBadShape};
pub(crate) use double_bad::shape_vertices as double_bad_vertices;
pub use paths::{
    arrangement_ranks, cyclic_block_ranks, extend_2_1_thread, extend_2_thread, extend_45_thread,
    extend_by_arrangement, extend_cyclic_block, extend_long_thread, extend_open_path, long_thread_ranks,
    open_path_ranks, thread45_ranks, two_one_thread_ranks, two_thread_ranks,
};
pub use star::{reduce_pair, reduce_star, PairInstance, StarInstance};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LemmaError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("excluded case: m = 4, t = 5 and the designated vertex is y2 or y4")]
    ExceptionCase,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

pub(crate) fn precondition(msg: impl Into<String>) -> LemmaError {
    LemmaError::PreconditionViolated(msg.into())
}

/// Rank of the color of `v`, if `v` is colored.
pub(crate) fn rank_of(f: &Coloring, ranking: &Ranking, v: Vertex) -> Option<usize> {
    f.get(v).map(|c| ranking.rank(c))
}

pub(crate) fn ensure_uncolored(f: &Coloring, vs: &[Vertex]) -> Result<(), LemmaError> {
    match vs.iter().find(|&&v| f.contains(v)) {
        Some(v) => Err(precondition(format!("vertex {v} is already colored"))),
        None => Ok(()),
    }
}

pub(crate) fn ensure_path(g: &Graph, path: &[Vertex]) -> Result<(), LemmaError> {
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(LemmaError::ShapeMismatch(format!("{} and {} are not adjacent", w[0], w[1])));
        }
    }
    Ok(())
}

/// Writes rank-space colors through the ranking.
pub(crate) fn write_ranks(f: &mut Coloring, ranking: &Ranking, vs: &[Vertex], ranks: &[usize]) {
    for (&v, &r) in vs.iter().zip(ranks) {
        f.set(v, ranking.color(r));
    }
}

pub(crate) fn colors_to_ranks(ranking: &Ranking, colors: &[Color]) -> Vec<usize> {
    colors.iter().map(|&c| ranking.rank(c)).collect()
}
