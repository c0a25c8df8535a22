use std::collections::BTreeSet;

use super::{precondition, LemmaError};
use crate::coloring::{verify_descending_l, Color, Coloring, ListAssignment};
use crate::graph::{Graph, Vertex};

/// Two bad vertices `x`, `z` both joined to `y` by 1-threads.
///
/// `path` is `v1 w1 x w2 y w3 z w4 v2` where `v1`, `v2` lie outside the
/// graph being colored. `x_thread` and `z_thread` are the 4-thread
/// interiors from `x` and from `z`. `y_extra` is the 2-vertex of a third
/// 1-thread at `y`, if there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleBadShape {
    pub path: [Vertex; 9],
    pub x_thread: [Vertex; 4],
    pub z_thread: [Vertex; 4],
    pub y_extra: Option<Vertex>,
}

/// Descending-equitable `L`-coloring of the double-bad structure with colors
/// `{1, 2, 3}`.
pub fn color_bad_pair_m3(h: &Graph, lists: &ListAssignment, shape: &DoubleBadShape) -> Result<Coloring, LemmaError> {
    let [_, w1, x, w2, y, w3, z, w4, _] = shape.path;
    let [x1, x2, x3, x4] = shape.x_thread;
    let [z1, z2, z3, z4] = shape.z_thread;
    let expected = 15 + usize::from(shape.y_extra.is_some());
    if h.order() != expected {
        return Err(LemmaError::ShapeMismatch(format!("expected {expected} vertices, found {}", h.order())));
    }
    let inner_edges = [(w1, x), (x, w2), (w2, y), (y, w3), (w3, z), (z, w4), (x, x1), (x1, x2), (x2, x3), (x3, x4), (z, z1), (z1, z2), (z2, z3), (z3, z4)];
    if let Some((u, v)) = inner_edges.iter().find(|(u, v)| !h.has_edge(*u, *v)) {
        return Err(LemmaError::ShapeMismatch(format!("{u} and {v} are not adjacent")));
    }
    if let Some(y1) = shape.y_extra {
        if !h.has_edge(y, y1) {
            return Err(LemmaError::ShapeMismatch(format!("{y} and {y1} are not adjacent")));
        }
    }

    let u1 = [w1, w4, x1, x3, z3];
    let u2 = [w2, w3, x4, z1, z4];
    let u3 = [x, y, z, x2, z2];
    let colors: [Color; 3] = if shape.y_extra.is_some() {
        [1, 2, 3]
    } else {
        let at_y = lists.lists.get(&y).ok_or_else(|| precondition(format!("no list for {y}")))?;
        let c3 = *at_y.iter().next().ok_or_else(|| precondition("empty list at y"))?;
        let rest: Vec<Color> = (1..=3).filter(|&c| c != c3).collect();
        [rest[0], rest[1], c3]
    };
    let mut f = Coloring::new(3).expect("three colors");
    for (group, &c) in [&u1, &u2, &u3].into_iter().zip(&colors) {
        for &v in group.iter() {
            f.set(v, c);
        }
    }
    let mut pairs = vec![(w1, w2), (w4, w3), (x4, x3), (z4, z3)];
    if let Some(y1) = shape.y_extra {
        f.set(y1, colors[0]);
        pairs.push((y1, z1));
    }
    for (leaf, partner) in pairs {
        if !lists.allows(leaf, f.get(leaf).unwrap()) {
            f.swap(leaf, partner);
        }
    }
    let report = verify_descending_l(h, lists, &f);
    if !report.valid {
        return Err(LemmaError::ConstructionFailed(format!("{:?}", report.violations)));
    }
    Ok(f)
}

/// Vertices of the structure, without the two outside path ends.
pub(crate) fn shape_vertices(shape: &DoubleBadShape) -> BTreeSet<Vertex> {
    shape.path[1..8]
        .iter()
        .chain(&shape.x_thread)
        .chain(&shape.z_thread)
        .chain(shape.y_extra.as_ref())
        .copied()
        .collect()
}
