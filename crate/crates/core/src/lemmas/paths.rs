//! Extensions along threads and small vertex groups.

use std::collections::BTreeSet;

use super::{colors_to_ranks, ensure_path, ensure_uncolored, precondition, rank_of, write_ranks, LemmaError};
use crate::coloring::{Color, Coloring, Ranking};
use crate::graph::{Graph, Vertex};

/// `1, 2, ..., m, 1, 2, ...`: the rank of the `i`-th vertex (0-based).
fn cyclic(i: usize, m: usize) -> usize {
    i % m + 1
}

/// Ranks for the interior `v_1..v_t` of a thread whose ends have ranks
/// `left` and `right`.
pub fn long_thread_ranks(t: usize, m: usize, left: Option<usize>, right: Option<usize>) -> Result<Vec<usize>, LemmaError> {
    if m < 3 || t < 3 {
        return Err(precondition(format!("long thread needs t >= 3 and m >= 3, got t = {t}, m = {m}")));
    }
    if m == 3 && t == 4 {
        return Err(precondition("a 4-thread cannot be extended this way with 3 colors"));
    }
    let mut seq: Vec<usize> = (0..t).map(|i| cyclic(i, m)).collect();
    if left == Some(seq[0]) {
        seq.swap(0, 1);
    }
    if right == Some(seq[t - 1]) {
        seq.swap(t - 2, t - 1);
    }
    Ok(seq)
}

/// Colors the interior of `path = v_0, v_1, ..., v_t, v_{t+1}`. The ends may
/// coincide (a thread-cycle at a vertex of degree at least 4).
pub fn extend_long_thread(g: &Graph, f: &mut Coloring, path: &[Vertex]) -> Result<(), LemmaError> {
    if path.len() < 2 {
        return Err(precondition("path too short"));
    }
    ensure_path(g, path)?;
    let interior = &path[1..path.len() - 1];
    ensure_uncolored(f, interior)?;
    let ranking = Ranking::ascending(f);
    let left = rank_of(f, &ranking, path[0]);
    let right = rank_of(f, &ranking, path[path.len() - 1]);
    let ranks = long_thread_ranks(interior.len(), f.m(), left, right)?;
    write_ranks(f, &ranking, interior, &ranks);
    Ok(())
}

/// Ranks around a cycle of length `len`, proper as a cycle, using every rank
/// as evenly as possible with the surplus on the smallest ranks, and with
/// position 0 avoiding `forbidden`.
pub fn cyclic_block_ranks(len: usize, m: usize, forbidden: Option<usize>) -> Result<Vec<usize>, LemmaError> {
    if m < 3 || len < 4 {
        return Err(precondition(format!("cyclic block needs length >= 4 and m >= 3, got {len}, {m}")));
    }
    let mut seq: Vec<usize> = (0..len).map(|i| cyclic(i, m)).collect();
    if seq[len - 1] == seq[0] {
        seq.swap(len - 2, len - 1);
    }
    let shift = seq.iter().position(|&r| Some(r) != forbidden).expect("two distinct ranks occur");
    seq.rotate_left(shift);
    Ok(seq)
}

/// Colors a whole cycle `v_0 v_1 ... v_t v_0` whose only outside neighbor is
/// `outside`, adjacent to `v_0`.
pub fn extend_cyclic_block(g: &Graph, f: &mut Coloring, cycle: &[Vertex], outside: Vertex) -> Result<(), LemmaError> {
    if cycle.len() < 4 {
        return Err(precondition("cycle too short"));
    }
    let mut closed = cycle.to_vec();
    closed.push(cycle[0]);
    ensure_path(g, &closed)?;
    ensure_path(g, &[outside, cycle[0]])?;
    ensure_uncolored(f, cycle)?;
    let ranking = Ranking::ascending(f);
    let ranks = cyclic_block_ranks(cycle.len(), f.m(), rank_of(f, &ranking, outside))?;
    write_ranks(f, &ranking, cycle, &ranks);
    Ok(())
}

/// Ranks for `x_0, ..., x_q` on a path ending at a vertex of rank `end`.
pub fn open_path_ranks(n: usize, m: usize, end: Option<usize>) -> Result<Vec<usize>, LemmaError> {
    if m < 3 || n < 2 {
        return Err(precondition(format!("open path needs at least 2 vertices and m >= 3, got {n}, {m}")));
    }
    let mut seq: Vec<usize> = (0..n).map(|i| cyclic(i, m)).collect();
    if end == Some(seq[n - 1]) {
        seq.swap(n - 2, n - 1);
    }
    Ok(seq)
}

/// Colors `path[..len-1]`, all uncolored, where only the last vertex of
/// `path` is colored.
pub fn extend_open_path(g: &Graph, f: &mut Coloring, path: &[Vertex]) -> Result<(), LemmaError> {
    if path.len() < 3 {
        return Err(precondition("path too short"));
    }
    ensure_path(g, path)?;
    let body = &path[..path.len() - 1];
    ensure_uncolored(f, body)?;
    let ranking = Ranking::ascending(f);
    let ranks = open_path_ranks(body.len(), f.m(), rank_of(f, &ranking, path[path.len() - 1]))?;
    write_ranks(f, &ranking, body, &ranks);
    Ok(())
}

/// Ranks for `y_1..y_t` (t in {4, 5}) with `y_xi` avoiding `avoid`.
pub fn thread45_ranks(
    t: usize,
    m: usize,
    xi: usize,
    avoid: &[usize],
    left: Option<usize>,
    right: Option<usize>,
) -> Result<Vec<usize>, LemmaError> {
    if !(t == 4 || t == 5) || m < 4 || xi == 0 || xi > t || avoid.len() > 2 {
        return Err(precondition(format!("4/5-thread with t = {t}, m = {m}, x = y{xi}, |avoid| = {}", avoid.len())));
    }
    if m == 4 && t == 5 && (xi == 2 || xi == 4) {
        return Err(LemmaError::ExceptionCase);
    }
    if xi > t.div_ceil(2) {
        let mut r = thread45_ranks(t, m, t + 1 - xi, avoid, right, left)?;
        r.reverse();
        return Ok(r);
    }
    if m >= t {
        let mut order = vec![xi];
        order.extend([1, t].into_iter().filter(|&p| p != xi));
        order.extend((2..t).filter(|&p| p != xi));
        let forbidden: Vec<BTreeSet<usize>> = order
            .iter()
            .map(|&p| {
                let mut s = BTreeSet::new();
                if p == xi {
                    s.extend(avoid.iter().copied());
                }
                if p == 1 {
                    s.extend(left);
                }
                if p == t {
                    s.extend(right);
                }
                s
            })
            .collect();
        let values: Vec<usize> = (1..=t).collect();
        let got = arrangement_ranks(&values, &forbidden, &[])
            .ok_or_else(|| LemmaError::ConstructionFailed("no greedy order for the 4/5-thread".into()))?;
        let mut out = vec![0; t];
        for (k, &p) in order.iter().enumerate() {
            out[p - 1] = got[k];
        }
        return Ok(out);
    }
    // m = 4, t = 5, x in {y1, y3}.
    let mut y = [0usize; 6];
    let blocked: BTreeSet<usize> = avoid.iter().copied().chain(left).collect();
    if !blocked.contains(&1) {
        y[1] = 1;
        y[3] = 1;
        let c = (2..=4).find(|&c| Some(c) != right).unwrap();
        let rest: Vec<usize> = (2..=4).filter(|&r| r != c).collect();
        y[2] = rest[0];
        y[4] = rest[1];
        y[5] = c;
    } else {
        let c2 = (2..=4).find(|c| !blocked.contains(c)).unwrap();
        let c3 = (2..=4).find(|&c| c != c2 && Some(c) != left).unwrap();
        let c4 = (2..=4).find(|&c| c != c2 && c != c3).unwrap();
        let other = if xi == 1 { 3 } else { 1 };
        y[2] = 1;
        y[4] = 1;
        y[xi] = c2;
        y[other] = c3;
        y[5] = c4;
        if Some(c4) == right {
            y[4] = c4;
            y[5] = 1;
        }
    }
    Ok(y[1..].to_vec())
}

/// Colors the interior of `path = y_0 ... y_{t+1}` (t in {4, 5}) so that the
/// designated interior vertex `x` avoids the colors in `avoid`.
pub fn extend_45_thread(g: &Graph, f: &mut Coloring, path: &[Vertex], x: Vertex, avoid: &[Color]) -> Result<(), LemmaError> {
    ensure_path(g, path)?;
    let interior = &path[1..path.len().saturating_sub(1)];
    ensure_uncolored(f, interior)?;
    let xi = interior
        .iter()
        .position(|&v| v == x)
        .ok_or_else(|| precondition(format!("{x} is not interior to the thread")))?
        + 1;
    let ranking = Ranking::ascending(f);
    let ranks = thread45_ranks(
        interior.len(),
        f.m(),
        xi,
        &colors_to_ranks(&ranking, avoid),
        rank_of(f, &ranking, path[0]),
        rank_of(f, &ranking, path[path.len() - 1]),
    )?;
    write_ranks(f, &ranking, interior, &ranks);
    Ok(())
}

/// Ranks for `(y_1, y_2)` on a 2-thread `x y_1 y_2 y`.
pub fn two_thread_ranks(fx: usize, fy: usize) -> Result<[usize; 2], LemmaError> {
    if fx == fy {
        return Err(precondition("both ends of the 2-thread have the same color"));
    }
    Ok(if fx != 1 && fy != 2 { [1, 2] } else { [2, 1] })
}

fn colored_rank(f: &Coloring, ranking: &Ranking, v: Vertex) -> Result<usize, LemmaError> {
    rank_of(f, ranking, v).ok_or_else(|| precondition(format!("vertex {v} must be colored")))
}

/// Colors `y_1, y_2` of the 2-thread `path = [x, y_1, y_2, y]`.
pub fn extend_2_thread(g: &Graph, f: &mut Coloring, path: [Vertex; 4]) -> Result<(), LemmaError> {
    if f.m() < 4 {
        return Err(precondition("needs at least 4 colors"));
    }
    ensure_path(g, &path)?;
    ensure_uncolored(f, &path[1..3])?;
    let ranking = Ranking::ascending(f);
    let r = two_thread_ranks(colored_rank(f, &ranking, path[0])?, colored_rank(f, &ranking, path[3])?)?;
    write_ranks(f, &ranking, &path[1..3], &r);
    Ok(())
}

/// Ranks `(y_1, y_2, y_3)` for a 2-thread `x y_1 y_2 y` and a 1-thread
/// `x y_3 z`.
pub fn two_one_thread_ranks(fx: usize, fy: usize, fz: usize) -> Result<[usize; 3], LemmaError> {
    if fx == fy || fx == fz {
        return Err(precondition("the shared end's color repeats at a far end"));
    }
    let a = if fx <= 3 { fx } else { (1..=3).find(|&c| c != fy).unwrap() };
    let b = (1..=3).find(|&c| c != a && c != fz).unwrap();
    let c = (1..=3).find(|&c| c != a && c != b).unwrap();
    Ok([c, a, b])
}

/// Colors `y_1, y_2, y_3` given `two = [x, y_1, y_2, y]`, `one = [x, y_3, z]`.
pub fn extend_2_1_thread(g: &Graph, f: &mut Coloring, two: [Vertex; 4], one: [Vertex; 3]) -> Result<(), LemmaError> {
    if f.m() < 4 {
        return Err(precondition("needs at least 4 colors"));
    }
    if two[0] != one[0] {
        return Err(LemmaError::ShapeMismatch("threads do not share their first vertex".into()));
    }
    ensure_path(g, &two)?;
    ensure_path(g, &one)?;
    ensure_uncolored(f, &[two[1], two[2], one[1]])?;
    let ranking = Ranking::ascending(f);
    let r = two_one_thread_ranks(
        colored_rank(f, &ranking, two[0])?,
        colored_rank(f, &ranking, two[3])?,
        colored_rank(f, &ranking, one[2])?,
    )?;
    write_ranks(f, &ranking, &[two[1], two[2], one[1]], &r);
    Ok(())
}

/// Lexicographically first arrangement of the multiset `values` onto slots
/// `0..forbidden.len()` such that slot `i` avoids `forbidden[i]` and the
/// slots joined by `edges` differ.
pub fn arrangement_ranks(values: &[usize], forbidden: &[BTreeSet<usize>], edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    fn go(
        i: usize,
        pool: &mut Vec<usize>,
        out: &mut Vec<usize>,
        forbidden: &[BTreeSet<usize>],
        edges: &[(usize, usize)],
    ) -> bool {
        if i == forbidden.len() {
            return true;
        }
        let mut tried = BTreeSet::new();
        for k in 0..pool.len() {
            let v = pool[k];
            if !tried.insert(v) || forbidden[i].contains(&v) {
                continue;
            }
            let clash = edges
                .iter()
                .any(|&(a, b)| (a == i && b < i && out[b] == v) || (b == i && a < i && out[a] == v));
            if clash {
                continue;
            }
            pool.remove(k);
            out.push(v);
            if go(i + 1, pool, out, forbidden, edges) {
                return true;
            }
            out.pop();
            pool.insert(k, v);
        }
        false
    }
    if values.len() != forbidden.len() {
        return None;
    }
    let mut pool = values.to_vec();
    pool.sort_unstable();
    let mut out = Vec::with_capacity(values.len());
    go(0, &mut pool, &mut out, forbidden, edges).then_some(out)
}

/// Colors `targets` with the multiset `ranks`, properly with respect to every
/// colored neighbor and to each other, and with each `(v, others)` entry of
/// `avoid` keeping `v` off the colors of `others`. The first admissible
/// arrangement in lexicographic order is used.
pub fn extend_by_arrangement(
    g: &Graph,
    f: &mut Coloring,
    targets: &[Vertex],
    ranks: &[usize],
    avoid: &[(Vertex, Vec<Vertex>)],
) -> Result<(), LemmaError> {
    ensure_uncolored(f, targets)?;
    if ranks.iter().any(|&r| r == 0 || r > f.m()) {
        return Err(precondition("rank out of range"));
    }
    let ranking = Ranking::ascending(f);
    let mut forbidden = Vec::with_capacity(targets.len());
    for &v in targets {
        let mut s: BTreeSet<usize> = g.neighbors(v).iter().filter_map(|&w| rank_of(f, &ranking, w)).collect();
        for (_, others) in avoid.iter().filter(|(a, _)| *a == v) {
            s.extend(others.iter().filter_map(|&w| rank_of(f, &ranking, w)));
        }
        forbidden.push(s);
    }
    let mut edges = Vec::new();
    for i in 0..targets.len() {
        for j in i + 1..targets.len() {
            if g.has_edge(targets[i], targets[j]) {
                edges.push((i, j));
            }
        }
    }
    let got = arrangement_ranks(ranks, &forbidden, &edges)
        .ok_or_else(|| LemmaError::ConstructionFailed(format!("no admissible arrangement for {targets:?}")))?;
    write_ranks(f, &ranking, targets, &got);
    Ok(())
}
