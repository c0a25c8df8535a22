//! Descending-equitable list 3-colorings of subdivided stars and of two
//! subdivided stars joined by a 1-thread.
//!
//! Both reductions fix a color `c` for the roots, put the roots and the
//! middle vertex of every 4-thread into class `c`, then top the class up to
//! its target size with leaves that allow `c`. What remains is a disjoint
//! union of paths, which is 2-colored with exact class sizes by a small
//! subset-sum over the two alternations of each path.

use std::collections::{BTreeMap, BTreeSet};

use super::{precondition, LemmaError};
use crate::coloring::{target_sizes, verify_descending_l, Color, Coloring, ListAssignment};
use crate::graph::{Graph, Vertex};

/// A subdivided star. Each entry of `threads` lists the interior vertices of
/// one thread, starting next to `root`; its last vertex is the leaf. `a0`
/// counts the 0-threads of the root, which are not part of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarInstance {
    pub root: Vertex,
    pub threads: Vec<Vec<Vertex>>,
    pub a0: usize,
}

/// Two subdivided stars with roots `x` and `y` joined through `connector`.
/// Only `y` may carry 0-threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairInstance {
    pub x: Vertex,
    pub y: Vertex,
    pub connector: Vertex,
    pub x_threads: Vec<Vec<Vertex>>,
    pub y_threads: Vec<Vec<Vertex>>,
    pub a0: usize,
}

fn counts(threads: &[Vec<Vertex>]) -> [usize; 5] {
    let mut a = [0; 5];
    for th in threads {
        a[th.len().min(4)] += 1;
    }
    a
}

fn epsilon(s: usize) -> usize {
    3 * s.div_ceil(3) - s
}

fn check_threads(h: &Graph, root: Vertex, threads: &[Vec<Vertex>]) -> Result<(), LemmaError> {
    for th in threads {
        if ![1, 2, 4].contains(&th.len()) {
            return Err(precondition(format!("thread of length {} at {root}", th.len())));
        }
        let mut prev = root;
        for &v in th {
            if !h.has_edge(prev, v) {
                return Err(LemmaError::ShapeMismatch(format!("{prev} and {v} are not adjacent")));
            }
            prev = v;
        }
    }
    Ok(())
}

fn check_lists(lists: &ListAssignment, full: &[Vertex], leaves: &[Vertex], roots: &[Vertex]) -> Result<(), LemmaError> {
    let get = |v: Vertex| lists.lists.get(&v).ok_or_else(|| precondition(format!("no list for {v}")));
    for &v in full {
        if get(v)?.len() != 3 {
            return Err(precondition(format!("inner vertex {v} must allow all three colors")));
        }
    }
    for &v in leaves {
        if get(v)?.len() != 2 {
            return Err(precondition(format!("leaf {v} must have a list of size 2")));
        }
    }
    for &v in roots {
        if get(v)?.len() < 2 {
            return Err(precondition(format!("root {v} needs at least two colors")));
        }
    }
    for l in lists.lists.values() {
        if l.iter().any(|&c| c == 0 || c > 3) {
            return Err(precondition("lists must be subsets of {1, 2, 3}"));
        }
    }
    Ok(())
}

/// Vertices sorted into the roles the construction needs.
struct Layout {
    roots: Vec<Vertex>,
    /// Forced into class `c` together with the roots.
    mandatory: Vec<Vertex>,
    /// Leaves that may join class `c`, in preference order.
    optional: Vec<Vertex>,
    all: BTreeSet<Vertex>,
}

fn layout(roots: Vec<Vertex>, extra: &[Vertex], thread_sets: &[&[Vec<Vertex>]]) -> Layout {
    let mut mandatory = roots.clone();
    let mut two_leaves = Vec::new();
    let mut four_leaves = Vec::new();
    let mut all: BTreeSet<Vertex> = roots.iter().chain(extra).copied().collect();
    for threads in thread_sets {
        for th in threads.iter() {
            all.extend(th);
            match th.len() {
                2 => two_leaves.push(th[1]),
                4 => {
                    mandatory.push(th[1]);
                    four_leaves.push(th[3]);
                }
                _ => {}
            }
        }
    }
    two_leaves.extend(four_leaves);
    Layout { roots, mandatory, optional: two_leaves, all }
}

/// Next `k`-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Properly colors `rest` with the colors `a` and `b` so that exactly `na`
/// vertices get `a`, respecting lists.
fn two_color_exact(
    h: &Graph,
    lists: &ListAssignment,
    rest: &BTreeSet<Vertex>,
    a: Color,
    b: Color,
    na: usize,
) -> Option<BTreeMap<Vertex, Color>> {
    let sub = h.induced(rest);
    // each component: its two sides and which of the two orientations fit
    let mut comps: Vec<(Vec<Vertex>, Vec<Vertex>, [bool; 2])> = Vec::new();
    for comp in sub.components() {
        let mut side: BTreeMap<Vertex, bool> = BTreeMap::new();
        let mut stack = vec![comp[0]];
        side.insert(comp[0], false);
        while let Some(v) = stack.pop() {
            for &w in sub.neighbors(v) {
                match side.get(&w) {
                    Some(&s) if s == side[&v] => return None,
                    Some(_) => {}
                    None => {
                        side.insert(w, !side[&v]);
                        stack.push(w);
                    }
                }
            }
        }
        let (s0, s1): (Vec<_>, Vec<_>) = comp.iter().partition(|&&v| !side[&v]);
        let fits = |first: Color, second: Color| {
            s0.iter().all(|&v| lists.allows(v, first)) && s1.iter().all(|&v| lists.allows(v, second))
        };
        let ok = [fits(a, b), fits(b, a)];
        comps.push((s0, s1, ok));
    }
    // reach[i] = set of achievable counts of `a` using the first i components
    let mut reach: Vec<BTreeMap<usize, (usize, usize)>> = vec![BTreeMap::from([(0, (0, 0))])];
    for (s0, s1, ok) in &comps {
        let mut next = BTreeMap::new();
        for &cnt in reach.last().unwrap().keys() {
            for (orient, gain) in [(0, s0.len()), (1, s1.len())] {
                if ok[orient] {
                    next.entry(cnt + gain).or_insert((cnt, orient));
                }
            }
        }
        reach.push(next);
    }
    reach.last().unwrap().get(&na)?;
    let mut out = BTreeMap::new();
    let mut cnt = na;
    for i in (0..comps.len()).rev() {
        let (prev, orient) = reach[i + 1][&cnt];
        let (s0, s1, _) = &comps[i];
        let (ca, cb) = if orient == 0 { (s0, s1) } else { (s1, s0) };
        out.extend(ca.iter().map(|&v| (v, a)));
        out.extend(cb.iter().map(|&v| (v, b)));
        cnt = prev;
    }
    Some(out)
}

fn construct(h: &Graph, lists: &ListAssignment, lay: &Layout, root_colors: &BTreeSet<Color>) -> Result<Coloring, LemmaError> {
    let s = lay.all.len();
    if h.order() != s || lay.all.iter().any(|&v| !h.contains(v)) {
        return Err(LemmaError::ShapeMismatch("instance does not cover the graph".into()));
    }
    let p = target_sizes(s, 3).expect("three colors");
    for &c in root_colors {
        if lay.mandatory.iter().any(|&v| !lists.allows(v, c)) {
            continue;
        }
        let Some(k) = p[c - 1].checked_sub(lay.mandatory.len()) else { continue };
        let optional: Vec<Vertex> = lay.optional.iter().copied().filter(|&v| lists.allows(v, c)).collect();
        if k > optional.len() {
            continue;
        }
        let others: Vec<Color> = (1..=3).filter(|&o| o != c).collect();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let class_c: BTreeSet<Vertex> = lay.mandatory.iter().copied().chain(idx.iter().map(|&i| optional[i])).collect();
            let rest: BTreeSet<Vertex> = lay.all.difference(&class_c).copied().collect();
            if let Some(two) = two_color_exact(h, lists, &rest, others[0], others[1], p[others[0] - 1]) {
                let mut f = Coloring::new(3).expect("three colors");
                for &v in &class_c {
                    f.set(v, c);
                }
                for (v, col) in two {
                    f.set(v, col);
                }
                let report = verify_descending_l(h, lists, &f);
                if report.valid {
                    return Ok(f);
                }
                return Err(LemmaError::ConstructionFailed(format!("{:?}", report.violations)));
            }
            if !next_combination(&mut idx, optional.len()) {
                break;
            }
        }
    }
    Err(LemmaError::ConstructionFailed(format!("no admissible root color for roots {:?}", lay.roots)))
}

/// Descending-equitable `L`-coloring of a subdivided star with colors
/// `{1, 2, 3}`.
pub fn reduce_star(h: &Graph, lists: &ListAssignment, inst: &StarInstance) -> Result<Coloring, LemmaError> {
    check_threads(h, inst.root, &inst.threads)?;
    let d = inst.threads.len() + inst.a0;
    let a = counts(&inst.threads);
    let s = 1 + inst.threads.iter().map(Vec::len).sum::<usize>();
    let eps = epsilon(s);
    if d > 6 || 2 * a[4] + a[2] < a[1] + 1 + eps || a[4] + 4 < d {
        return Err(precondition(format!("star at {} with counts {a:?}, d = {d}, s = {s}", inst.root)));
    }
    let lay = layout(vec![inst.root], &[], &[&inst.threads]);
    let leaves: Vec<Vertex> = inst.threads.iter().map(|th| th[th.len() - 1]).collect();
    let inner: Vec<Vertex> = inst.threads.iter().flat_map(|th| th[..th.len() - 1].iter().copied()).collect();
    check_lists(lists, &inner, &leaves, &[inst.root])?;
    construct(h, lists, &lay, lists.get(inst.root))
}

/// Descending-equitable `L`-coloring of two stars joined by a 1-thread.
pub fn reduce_pair(h: &Graph, lists: &ListAssignment, inst: &PairInstance) -> Result<Coloring, LemmaError> {
    check_threads(h, inst.x, &inst.x_threads)?;
    check_threads(h, inst.y, &inst.y_threads)?;
    if !h.has_edge(inst.x, inst.connector) || !h.has_edge(inst.connector, inst.y) {
        return Err(LemmaError::ShapeMismatch("connector does not join the roots".into()));
    }
    let dx = inst.x_threads.len() + 1;
    let dy = inst.y_threads.len() + 1 + inst.a0;
    let mut b = counts(&inst.x_threads);
    for (i, v) in counts(&inst.y_threads).into_iter().enumerate() {
        b[i] += v;
    }
    let s = 3 + inst.x_threads.iter().chain(&inst.y_threads).map(Vec::len).sum::<usize>();
    let eps = epsilon(s);
    if dx < 3 || dy < 3 {
        return Err(precondition(format!("roots must be branch vertices, degrees are {dx} and {dy}")));
    }
    if dx + dy > 8 || 2 * b[4] + b[2] + 1 < b[1] + eps || b[4] < 1 {
        return Err(precondition(format!("pair {}-{} with counts {b:?}, s = {s}", inst.x, inst.y)));
    }
    let lay = layout(vec![inst.x, inst.y], &[inst.connector], &[&inst.x_threads, &inst.y_threads]);
    let all_threads = || inst.x_threads.iter().chain(&inst.y_threads);
    let leaves: Vec<Vertex> = all_threads().map(|th| th[th.len() - 1]).collect();
    let mut inner: Vec<Vertex> = all_threads().flat_map(|th| th[..th.len() - 1].iter().copied()).collect();
    inner.extend([inst.x, inst.connector]);
    check_lists(lists, &inner, &leaves, &[inst.y])?;
    construct(h, lists, &lay, lists.get(inst.y))
}
