//! Colorings, equitability checks and list assignments.
//!
//! Colors are `1..=m`. Lemma code works in *rank space*: after sorting the
//! classes of a partial coloring by size (ascending, ties by color index),
//! rank 1 names a smallest class. [`Ranking`] translates between the two.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub type Color = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("invalid color count {0}")]
    InvalidColorCount(usize),
    #[error("color {color} out of range 1..={m}")]
    ColorOutOfRange { color: Color, m: usize },
    #[error("coloring misses vertex {0}")]
    IncompleteColoring(Vertex),
    #[error("vertex {0} is colored in both inputs")]
    VertexCollision(Vertex),
    #[error("color counts differ: {0} vs {1}")]
    ColorCountMismatch(usize, usize),
    #[error("class sizes {0:?} do not match the assignment")]
    InconsistentSizes(Vec<usize>),
}

/// A partial map vertex -> color with incremental class-size bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    m: usize,
    assignment: BTreeMap<Vertex, Color>,
    class_sizes: Vec<usize>,
}

#[derive(Deserialize)]
struct RawColoring {
    m: usize,
    assignment: BTreeMap<Vertex, Color>,
    #[serde(default)]
    class_sizes: Option<Vec<usize>>,
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawColoring::deserialize(d)?;
        let mut f = Coloring::new(raw.m).map_err(D::Error::custom)?;
        for (v, c) in raw.assignment {
            f.try_set(v, c).map_err(D::Error::custom)?;
        }
        if let Some(sizes) = raw.class_sizes {
            if sizes != f.class_sizes {
                return Err(D::Error::custom(ColoringError::InconsistentSizes(sizes)));
            }
        }
        Ok(f)
    }
}

impl Coloring {
    pub fn new(m: usize) -> Result<Self, ColoringError> {
        if m == 0 {
            return Err(ColoringError::InvalidColorCount(m));
        }
        Ok(Coloring { m, assignment: BTreeMap::new(), class_sizes: vec![0; m] })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.assignment.get(&v).copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.assignment.contains_key(&v)
    }

    /// Size of class `c` (1-based).
    pub fn class_size(&self, c: Color) -> usize {
        self.class_sizes[c - 1]
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Color)> + '_ {
        self.assignment.iter().map(|(&v, &c)| (v, c))
    }

    pub fn try_set(&mut self, v: Vertex, c: Color) -> Result<(), ColoringError> {
        if c == 0 || c > self.m {
            return Err(ColoringError::ColorOutOfRange { color: c, m: self.m });
        }
        if let Some(old) = self.assignment.insert(v, c) {
            self.class_sizes[old - 1] -= 1;
        }
        self.class_sizes[c - 1] += 1;
        Ok(())
    }

    /// Assigns or reassigns `v`. Panics on an out-of-range color.
    pub fn set(&mut self, v: Vertex, c: Color) {
        self.try_set(v, c).expect("color in range");
    }

    pub fn unset(&mut self, v: Vertex) -> Option<Color> {
        let old = self.assignment.remove(&v)?;
        self.class_sizes[old - 1] -= 1;
        Some(old)
    }

    /// Exchanges the colors of two colored vertices.
    pub fn swap(&mut self, u: Vertex, v: Vertex) {
        let cu = self.assignment[&u];
        let cv = self.assignment[&v];
        self.assignment.insert(u, cv);
        self.assignment.insert(v, cu);
    }

    /// Whether class sizes differ by at most one.
    pub fn is_balanced(&self) -> bool {
        let max = self.class_sizes.iter().max().copied().unwrap_or(0);
        let min = self.class_sizes.iter().min().copied().unwrap_or(0);
        max - min <= 1
    }

    /// Applies a color permutation: color `c` becomes `perm[c - 1]`.
    pub fn permuted(&self, perm: &[Color]) -> Coloring {
        let mut out = Coloring::new(self.m).unwrap();
        for (v, c) in self.iter() {
            out.set(v, perm[c - 1]);
        }
        out
    }

    /// Colors restricted to `vs` (uncolored members are skipped).
    pub fn restricted(&self, vs: &BTreeSet<Vertex>) -> Coloring {
        let mut out = Coloring::new(self.m).unwrap();
        for &v in vs {
            if let Some(c) = self.get(v) {
                out.set(v, c);
            }
        }
        out
    }
}

/// Class sizes of an equitable split of `n` items into `m` classes, largest
/// first.
pub fn target_sizes(n: usize, m: usize) -> Result<Vec<usize>, ColoringError> {
    if m == 0 {
        return Err(ColoringError::InvalidColorCount(m));
    }
    let (q, r) = (n / m, n % m);
    Ok((0..m).map(|i| if i < r { q + 1 } else { q }).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SortOrder {
    Ascending,
    Descending,
}

/// Relabels colors so class sizes are sorted (ties by original index).
/// Returns the relabeled coloring and `perm` with `perm[old - 1] = new`.
pub fn sort_relabel(f: &Coloring, order: SortOrder) -> (Coloring, Vec<Color>) {
    let mut by_size: Vec<Color> = (1..=f.m()).collect();
    by_size.sort_by_key(|&c| {
        let s = f.class_size(c) as i64;
        (if order == SortOrder::Ascending { s } else { -s }, c)
    });
    let mut perm = vec![0; f.m()];
    for (i, &c) in by_size.iter().enumerate() {
        perm[c - 1] = i + 1;
    }
    (f.permuted(&perm), perm)
}

/// Ascending rank view of a partial coloring: rank 1 is a smallest class.
#[derive(Clone, Debug)]
pub struct Ranking {
    by_rank: Vec<Color>,
    rank_of: Vec<usize>,
}

impl Ranking {
    pub fn ascending(f: &Coloring) -> Ranking {
        let (_, perm) = sort_relabel(f, SortOrder::Ascending);
        let mut by_rank = vec![0; f.m()];
        for (i, &r) in perm.iter().enumerate() {
            by_rank[r - 1] = i + 1;
        }
        Ranking { by_rank, rank_of: perm }
    }

    /// The actual color holding rank `r` (1-based).
    pub fn color(&self, r: usize) -> Color {
        self.by_rank[r - 1]
    }

    pub fn rank(&self, c: Color) -> usize {
        self.rank_of[c - 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    MonochromaticEdge { u: Vertex, v: Vertex, color: Color },
    SizeGap { larger: Color, larger_size: usize, smaller: Color, smaller_size: usize },
    NotDescending { color: Color, size: usize, next_size: usize },
    OutsideList { vertex: Vertex, color: Color },
    Uncolored { vertex: Vertex },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub valid: bool,
    pub class_sizes: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl Report {
    fn from(class_sizes: Vec<usize>, violations: Vec<Violation>) -> Report {
        Report { valid: violations.is_empty(), class_sizes, violations }
    }
}

fn edge_violations(g: &Graph, f: &Coloring) -> Vec<Violation> {
    g.edges()
        .filter_map(|(u, v)| match (f.get(u), f.get(v)) {
            (Some(a), Some(b)) if a == b => Some(Violation::MonochromaticEdge { u, v, color: a }),
            _ => None,
        })
        .collect()
}

/// Checks that `f` is a proper coloring of `g` with balanced classes.
pub fn verify_equitable(g: &Graph, f: &Coloring) -> Result<Report, ColoringError> {
    if let Some(v) = g.vertices().find(|&v| !f.contains(v)) {
        return Err(ColoringError::IncompleteColoring(v));
    }
    let own: BTreeSet<Vertex> = g.vertices().collect();
    let f = f.restricted(&own);
    let mut violations = edge_violations(g, &f);
    let sizes = f.class_sizes().to_vec();
    let (mut hi, mut lo) = (1, 1);
    for c in 1..=f.m() {
        if sizes[c - 1] > sizes[hi - 1] {
            hi = c;
        }
        if sizes[c - 1] < sizes[lo - 1] {
            lo = c;
        }
    }
    if sizes[hi - 1] > sizes[lo - 1] + 1 {
        violations.push(Violation::SizeGap {
            larger: hi,
            larger_size: sizes[hi - 1],
            smaller: lo,
            smaller_size: sizes[lo - 1],
        });
    }
    Ok(Report::from(sizes, violations))
}

/// Allowed colors per vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    pub lists: BTreeMap<Vertex, BTreeSet<Color>>,
}

impl ListAssignment {
    pub fn get(&self, v: Vertex) -> &BTreeSet<Color> {
        &self.lists[&v]
    }

    pub fn allows(&self, v: Vertex, c: Color) -> bool {
        self.lists.get(&v).is_some_and(|l| l.contains(&c))
    }

    /// Relabels every list through `map` (old color -> new color).
    pub fn mapped(&self, map: impl Fn(Color) -> Color) -> ListAssignment {
        ListAssignment {
            lists: self
                .lists
                .iter()
                .map(|(&v, l)| (v, l.iter().map(|&c| map(c)).collect()))
                .collect(),
        }
    }
}

/// `l_v = {1..m} \ f(N_G(v) \ H)` for every `v` in `h`. Neighbors that `f`
/// leaves uncolored are ignored.
pub fn lists_from_boundary(g: &Graph, h: &BTreeSet<Vertex>, f: &Coloring, m: usize) -> ListAssignment {
    let mut lists = BTreeMap::new();
    for &v in h {
        let mut l: BTreeSet<Color> = (1..=m).collect();
        for &w in g.neighbors(v) {
            if !h.contains(&w) {
                if let Some(c) = f.get(w) {
                    l.remove(&c);
                }
            }
        }
        lists.insert(v, l);
    }
    ListAssignment { lists }
}

/// Checks a proper `L`-coloring of `h` with `|V_1| >= ... >= |V_m| >= |V_1| - 1`.
pub fn verify_descending_l(h: &Graph, lists: &ListAssignment, f: &Coloring) -> Report {
    let mut violations = Vec::new();
    for v in h.vertices() {
        match f.get(v) {
            None => violations.push(Violation::Uncolored { vertex: v }),
            Some(c) if !lists.allows(v, c) => violations.push(Violation::OutsideList { vertex: v, color: c }),
            Some(_) => {}
        }
    }
    let own: BTreeSet<Vertex> = h.vertices().collect();
    let f = f.restricted(&own);
    violations.extend(edge_violations(h, &f));
    let sizes = f.class_sizes().to_vec();
    for c in 1..f.m() {
        if sizes[c - 1] < sizes[c] {
            violations.push(Violation::NotDescending { color: c, size: sizes[c - 1], next_size: sizes[c] });
        }
    }
    if sizes[0] > sizes[f.m() - 1] + 1 {
        violations.push(Violation::SizeGap {
            larger: 1,
            larger_size: sizes[0],
            smaller: f.m(),
            smaller_size: sizes[f.m() - 1],
        });
    }
    Report::from(sizes, violations)
}

/// Union of a coloring sorted descending and one sorted ascending, as in the
/// component-merging argument: the result is equitable whenever both are.
pub fn merge_components(desc: &Coloring, asc: &Coloring) -> Result<Coloring, ColoringError> {
    if desc.m() != asc.m() {
        return Err(ColoringError::ColorCountMismatch(desc.m(), asc.m()));
    }
    let mut out = desc.clone();
    for (v, c) in asc.iter() {
        if out.contains(v) {
            return Err(ColoringError::VertexCollision(v));
        }
        out.set(v, c);
    }
    Ok(out)
}

/// Sorts both inputs as required and merges them.
pub fn merge_equitable(a: &Coloring, b: &Coloring) -> Result<Coloring, ColoringError> {
    let (a, _) = sort_relabel(a, SortOrder::Descending);
    let (b, _) = sort_relabel(b, SortOrder::Ascending);
    merge_components(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn with_sizes(sizes: &[usize]) -> Coloring {
        let mut f = Coloring::new(sizes.len()).unwrap();
        let mut v = 0;
        for (i, &s) in sizes.iter().enumerate() {
            for _ in 0..s {
                f.set(v, i + 1);
                v += 1;
            }
        }
        f
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(0..n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn target_sizes_examples() {
        assert_eq!(target_sizes(14, 4).unwrap(), vec![4, 4, 3, 3]);
        assert_eq!(target_sizes(9, 3).unwrap(), vec![3, 3, 3]);
        assert_eq!(target_sizes(7, 3).unwrap(), vec![3, 2, 2]);
        assert_eq!(target_sizes(3, 0), Err(ColoringError::InvalidColorCount(0)));
    }

    #[test]
    fn c14_patched_to_5_5_4_is_valid() {
        let g = cycle(14);
        let mut f = Coloring::new(3).unwrap();
        for i in 0..14 {
            f.set(i, i % 3 + 1);
        }
        // 1,2,3 repeating leaves v13 = 2 next to v0 = 1: fine, but sizes are
        // (5,5,4) already.
        assert_eq!(f.class_sizes(), &[5, 5, 4]);
        let r = verify_equitable(&g, &f).unwrap();
        assert!(r.valid, "{r:?}");
    }

    #[test]
    fn monochromatic_edge_is_reported() {
        let g = cycle(4);
        let mut f = Coloring::new(2).unwrap();
        f.set(0, 1);
        f.set(1, 1);
        f.set(2, 2);
        f.set(3, 2);
        let r = verify_equitable(&g, &f).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violations, vec![
                Violation::MonochromaticEdge { u: 0, v: 1, color: 1 },
                Violation::MonochromaticEdge { u: 2, v: 3, color: 2 },
            ]);
    }

    #[test]
    fn size_gap_is_reported() {
        let g = Graph::with_vertices(0..10);
        let f = with_sizes(&[6, 4]);
        let r = verify_equitable(&g, &f).unwrap();
        assert!(!r.valid);
        assert!(matches!(r.violations[0], Violation::SizeGap { larger_size: 6, smaller_size: 4, .. }));
        let partial = with_sizes(&[3, 3]);
        assert_eq!(verify_equitable(&g, &partial), Err(ColoringError::IncompleteColoring(6)));
    }

    #[test]
    fn sort_relabel_examples() {
        let (f, perm) = sort_relabel(&with_sizes(&[1, 3, 2]), SortOrder::Ascending);
        assert_eq!(f.class_sizes(), &[1, 2, 3]);
        assert_eq!(perm, vec![1, 3, 2]);
        let (_, perm) = sort_relabel(&with_sizes(&[1, 2, 3]), SortOrder::Ascending);
        assert_eq!(perm, vec![1, 2, 3]);
        let (_, perm) = sort_relabel(&with_sizes(&[2, 2, 2]), SortOrder::Descending);
        assert_eq!(perm, vec![1, 2, 3]);
    }

    #[test]
    fn merge_examples() {
        let h = with_sizes(&[3, 3, 2]);
        let mut k = Coloring::new(3).unwrap();
        let mut v = 100;
        for (c, s) in [(1, 2), (2, 3), (3, 3)] {
            for _ in 0..s {
                k.set(v, c);
                v += 1;
            }
        }
        let u = merge_components(&h, &k).unwrap();
        assert_eq!(u.class_sizes(), &[5, 6, 5]);
        assert!(u.is_balanced());
        let empty = Coloring::new(3).unwrap();
        assert_eq!(merge_components(&empty, &k).unwrap(), k);
        assert_eq!(merge_components(&h, &h), Err(ColoringError::VertexCollision(0)));
        assert_eq!(
            merge_components(&h, &Coloring::new(4).unwrap()),
            Err(ColoringError::ColorCountMismatch(3, 4))
        );
    }

    #[test]
    fn merge_is_equitable_for_all_small_size_vectors() {
        for m in 1..=6 {
            for n1 in 0..=30 {
                for n2 in 0..=(30 - n1) {
                    let mut a = Coloring::new(m).unwrap();
                    let sa = target_sizes(n1, m).unwrap();
                    let sb = target_sizes(n2, m).unwrap();
                    let mut v = 0;
                    for (i, &s) in sa.iter().enumerate() {
                        for _ in 0..s {
                            a.set(v, i + 1);
                            v += 1;
                        }
                    }
                    let mut b = Coloring::new(m).unwrap();
                    // put b's big classes on the highest colors to exercise sorting
                    for (i, &s) in sb.iter().enumerate() {
                        for _ in 0..s {
                            b.set(v, m - i);
                            v += 1;
                        }
                    }
                    assert!(merge_equitable(&a, &b).unwrap().is_balanced(), "m={m} n1={n1} n2={n2}");
                }
            }
        }
    }

    #[test]
    fn boundary_lists() {
        // x(0) - y1(1) - y2(2) - y(3), outside colored 1 and 2
        let g = Graph::from_edges(0..4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut f = Coloring::new(4).unwrap();
        f.set(0, 1);
        f.set(3, 2);
        let l = lists_from_boundary(&g, &BTreeSet::from([1, 2]), &f, 4);
        assert_eq!(l.get(1), &BTreeSet::from([2, 3, 4]));
        assert_eq!(l.get(2), &BTreeSet::from([1, 3, 4]));
        let lonely = Graph::with_vertices([7]);
        let l = lists_from_boundary(&lonely, &BTreeSet::from([7]), &f, 3);
        assert_eq!(l.get(7), &BTreeSet::from([1, 2, 3]));
        let mut f3 = Coloring::new(3).unwrap();
        f3.set(3, 3);
        let l = lists_from_boundary(&g, &BTreeSet::from([2]), &f3, 3);
        assert_eq!(l.get(2), &BTreeSet::from([1, 2]));
    }

    #[test]
    fn descending_l_checks() {
        let h = Graph::with_vertices(0..9);
        let full = ListAssignment { lists: (0..9).map(|v| (v, BTreeSet::from([1, 2, 3]))).collect() };
        let f = with_sizes(&[3, 3, 3]);
        assert!(verify_descending_l(&h, &full, &f).valid);
        let bad = with_sizes(&[3, 2, 3]);
        let h8 = Graph::with_vertices(0..8);
        assert!(!verify_descending_l(&h8, &full, &bad).valid);
        let mut narrow = full.clone();
        narrow.lists.insert(0, BTreeSet::from([2, 3]));
        let r = verify_descending_l(&h, &narrow, &f);
        assert_eq!(r.violations, vec![Violation::OutsideList { vertex: 0, color: 1 }]);
    }

    #[test]
    fn json_shape() {
        let f = with_sizes(&[1, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"m":2,"assignment":{"0":1,"1":2},"class_sizes":[1,1]}"#);
        let back: Coloring = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Coloring>(r#"{"m":2,"assignment":{"0":1},"class_sizes":[0,1]}"#).is_err());
    }

    proptest! {
        #[test]
        fn sort_relabel_keeps_the_partition(colors in proptest::collection::vec(1usize..=5, 0..40)) {
            let mut f = Coloring::new(5).unwrap();
            for (v, &c) in colors.iter().enumerate() {
                f.set(v, c);
            }
            for order in [SortOrder::Ascending, SortOrder::Descending] {
                let (g, perm) = sort_relabel(&f, order);
                for (u, cu) in f.iter() {
                    for (v, cv) in f.iter() {
                        prop_assert_eq!(cu == cv, g.get(u) == g.get(v));
                    }
                    prop_assert_eq!(g.get(u), Some(perm[cu - 1]));
                }
                let s = g.class_sizes();
                for w in s.windows(2) {
                    let sorted = match order {
                        SortOrder::Ascending => w[0] <= w[1],
                        SortOrder::Descending => w[0] >= w[1],
                    };
                    prop_assert!(sorted);
                }
            }
        }

        #[test]
        fn equitable_iff_proper_and_target_multiset(colors in proptest::collection::vec(1usize..=3, 1..12)) {
            let n = colors.len();
            let g = Graph::from_edges(0..n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap();
            let mut f = Coloring::new(3).unwrap();
            for (v, &c) in colors.iter().enumerate() {
                f.set(v, c);
            }
            let proper = (0..n.saturating_sub(1)).all(|i| colors[i] != colors[i + 1]);
            let mut sizes = f.class_sizes().to_vec();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let target = target_sizes(n, 3).unwrap();
            prop_assert_eq!(verify_equitable(&g, &f).unwrap().valid, proper && sizes == target);
        }
    }
}
