use std::collections::BTreeSet;

use super::config::{Config, Step};
use crate::coloring::{lists_from_boundary, Coloring, Ranking};
use crate::graph::{Graph, Vertex};
use crate::lemmas::{self, LemmaError, PairInstance, StarInstance};

/// Colors every vertex of `cfg.deletion_set` by replaying its steps on `f`.
/// `g` is the graph the configuration was found in; vertices `f` leaves
/// uncolored are treated as absent.
pub(crate) fn apply(g: &Graph, f: &mut Coloring, cfg: &Config) -> Result<(), LemmaError> {
    for step in &cfg.steps {
        apply_step(g, f, step)?;
    }
    Ok(())
}

fn colors_of(f: &Coloring, vs: &[Vertex]) -> Vec<usize> {
    vs.iter().filter_map(|&v| f.get(v)).collect()
}

/// Colors `set` with a rank-space coloring from one of the list lemmas.
fn list_lemma(
    g: &Graph,
    f: &mut Coloring,
    set: BTreeSet<Vertex>,
    run: impl FnOnce(&Graph, &crate::coloring::ListAssignment) -> Result<Coloring, LemmaError>,
) -> Result<(), LemmaError> {
    if f.m() != 3 {
        return Err(lemmas::precondition("list reductions need exactly 3 colors"));
    }
    lemmas::ensure_uncolored(f, &set.iter().copied().collect::<Vec<_>>())?;
    let ranking = Ranking::ascending(f);
    let h = g.induced(&set);
    let lists = lists_from_boundary(g, &set, f, 3).mapped(|c| ranking.rank(c));
    let local = run(&h, &lists)?;
    for (v, r) in local.iter() {
        f.set(v, ranking.color(r));
    }
    Ok(())
}

fn apply_step(g: &Graph, f: &mut Coloring, step: &Step) -> Result<(), LemmaError> {
    match step {
        Step::LongThread { path } => lemmas::extend_long_thread(g, f, path),
        Step::CyclicBlock { cycle, outside } => lemmas::extend_cyclic_block(g, f, cycle, *outside),
        Step::OpenPath { path } => lemmas::extend_open_path(g, f, path),
        Step::Thread45 { path, x, avoid } => {
            let colors = colors_of(f, avoid);
            lemmas::extend_45_thread(g, f, path, *x, &colors)
        }
        Step::Thread2 { path } => lemmas::extend_2_thread(g, f, *path),
        Step::Thread21 { two, one } => lemmas::extend_2_1_thread(g, f, *two, *one),
        Step::Assign { targets, ranks, avoid } => lemmas::extend_by_arrangement(g, f, targets, ranks, avoid),
        Step::Star { root, threads, a0 } => {
            let set: BTreeSet<Vertex> = std::iter::once(*root).chain(threads.iter().flatten().copied()).collect();
            let inst = StarInstance { root: *root, threads: threads.clone(), a0: *a0 };
            list_lemma(g, f, set, |h, lists| lemmas::reduce_star(h, lists, &inst))
        }
        Step::Pair { x, y, connector, x_threads, y_threads, a0 } => {
            let set: BTreeSet<Vertex> =
                [*x, *y, *connector].into_iter().chain(x_threads.iter().chain(y_threads).flatten().copied()).collect();
            let inst = PairInstance {
                x: *x,
                y: *y,
                connector: *connector,
                x_threads: x_threads.clone(),
                y_threads: y_threads.clone(),
                a0: *a0,
            };
            list_lemma(g, f, set, |h, lists| lemmas::reduce_pair(h, lists, &inst))
        }
        Step::DoubleBad { .. } => {
            let shape = step.double_bad_shape().expect("double-bad step");
            let set = lemmas::double_bad_vertices(&shape);
            list_lemma(g, f, set, |h, lists| lemmas::color_bad_pair_m3(h, lists, &shape))
        }
    }
}
