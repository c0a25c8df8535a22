//! Reducible configurations: detection in a fixed priority order and the
//! extension steps each one replays.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::lemmas::DoubleBadShape;
use crate::threads::{Thread, ThreadMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigKind {
    EqualEndpointThread,
    LongThread,
    FourVertexOverload,
    ThreeVertexOverload,
    BadNeighborhood,
    M3LongThread,
    M3StarViolation,
    M3BadPairThread,
    M3DoubleBad,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 9] = [
        ConfigKind::EqualEndpointThread,
        ConfigKind::LongThread,
        ConfigKind::FourVertexOverload,
        ConfigKind::ThreeVertexOverload,
        ConfigKind::BadNeighborhood,
        ConfigKind::M3LongThread,
        ConfigKind::M3StarViolation,
        ConfigKind::M3BadPairThread,
        ConfigKind::M3DoubleBad,
    ];
}

/// One stage of an extension, applied to the coloring in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    /// Interior of `path` along a thread (ends may coincide).
    LongThread { path: Vec<Vertex> },
    /// A whole thread-cycle `cycle` hanging from `outside`.
    CyclicBlock { cycle: Vec<Vertex>, outside: Vertex },
    /// Every vertex of `path` except the last, which is already colored.
    OpenPath { path: Vec<Vertex> },
    /// Interior of a 4- or 5-thread with `x` avoiding the colors of `avoid`.
    Thread45 { path: Vec<Vertex>, x: Vertex, avoid: Vec<Vertex> },
    Thread2 { path: [Vertex; 4] },
    Thread21 { two: [Vertex; 4], one: [Vertex; 3] },
    /// The multiset `ranks` placed on `targets`, properly, with each
    /// `(v, others)` in `avoid` keeping `v` off the colors of `others`.
    Assign { targets: Vec<Vertex>, ranks: Vec<usize>, avoid: Vec<(Vertex, Vec<Vertex>)> },
    Star { root: Vertex, threads: Vec<Vec<Vertex>>, a0: usize },
    Pair { x: Vertex, y: Vertex, connector: Vertex, x_threads: Vec<Vec<Vertex>>, y_threads: Vec<Vec<Vertex>>, a0: usize },
    DoubleBad { path: [Vertex; 9], x_thread: [Vertex; 4], z_thread: [Vertex; 4], y_extra: Option<Vertex> },
}

impl Step {
    fn mentioned(&self) -> Vec<Vertex> {
        match self {
            Step::LongThread { path } | Step::OpenPath { path } => path.clone(),
            Step::CyclicBlock { cycle, outside } => cycle.iter().copied().chain([*outside]).collect(),
            Step::Thread45 { path, avoid, .. } => path.iter().chain(avoid).copied().collect(),
            Step::Thread2 { path } => path.to_vec(),
            Step::Thread21 { two, one } => two.iter().chain(one).copied().collect(),
            Step::Assign { targets, avoid, .. } => {
                targets.iter().copied().chain(avoid.iter().flat_map(|(v, o)| std::iter::once(*v).chain(o.iter().copied()))).collect()
            }
            Step::Star { root, threads, .. } => std::iter::once(*root).chain(threads.iter().flatten().copied()).collect(),
            Step::Pair { x, y, connector, x_threads, y_threads, .. } => {
                [*x, *y, *connector].into_iter().chain(x_threads.iter().chain(y_threads).flatten().copied()).collect()
            }
            Step::DoubleBad { path, x_thread, z_thread, y_extra } => {
                path.iter().chain(x_thread).chain(z_thread).chain(y_extra.as_ref()).copied().collect()
            }
        }
    }

    pub(crate) fn double_bad_shape(&self) -> Option<DoubleBadShape> {
        match self {
            Step::DoubleBad { path, x_thread, z_thread, y_extra } => {
                Some(DoubleBadShape { path: *path, x_thread: *x_thread, z_thread: *z_thread, y_extra: *y_extra })
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    pub kind: ConfigKind,
    pub deletion_set: BTreeSet<Vertex>,
    pub steps: Vec<Step>,
}

impl Config {
    /// Vertices the extension reads but does not color.
    pub fn anchors(&self) -> BTreeSet<Vertex> {
        self.steps
            .iter()
            .flat_map(Step::mentioned)
            .filter(|v| !self.deletion_set.contains(v))
            .collect()
    }

    fn new(kind: ConfigKind, deletion: impl IntoIterator<Item = Vertex>, steps: Vec<Step>) -> Config {
        Config { kind, deletion_set: deletion.into_iter().collect(), steps }
    }
}

/// Which family of configurations to look for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    M4,
    M3,
}

/// Deleting `set` leaves every remaining vertex with degree at least 2.
pub(crate) fn keeps_min_degree(g: &Graph, set: &BTreeSet<Vertex>) -> bool {
    if set.is_empty() || set.iter().any(|&v| !g.contains(v)) {
        return false;
    }
    set.iter().all(|&v| {
        g.neighbors(v).iter().filter(|w| !set.contains(w)).all(|&w| {
            let lost = g.neighbors(w).iter().filter(|u| set.contains(u)).count();
            g.degree(w) - lost >= 2
        })
    })
}

fn path_of(th: &Thread) -> Vec<Vertex> {
    th.path()
}

/// `end, ..., x, ..., end'`: the two threads at `x` glued through `x`.
fn glue(a: &Thread, x: Vertex, b: &Thread) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = a.path().into_iter().rev().collect();
    debug_assert_eq!(p.last(), Some(&x));
    p.extend(b.interior.iter().copied());
    p.push(b.end);
    p
}

fn arr4(p: Vec<Vertex>) -> [Vertex; 4] {
    p.try_into().expect("2-thread path has 4 vertices")
}

fn arr3(p: Vec<Vertex>) -> [Vertex; 3] {
    p.try_into().expect("1-thread path has 3 vertices")
}

struct Scanner<'a> {
    g: &'a Graph,
    map: &'a ThreadMap,
    m: usize,
    first_only: bool,
    found: Vec<Config>,
}

impl Scanner<'_> {
    /// Records `cfg` if its deletion is admissible; returns true to stop.
    fn emit(&mut self, cfg: Config) -> bool {
        if keeps_min_degree(self.g, &cfg.deletion_set) {
            self.found.push(cfg);
            self.first_only
        } else {
            false
        }
    }

    fn branch_vertices(&self) -> Vec<Vertex> {
        self.g.vertices().filter(|&v| self.map.is_branch(v)).collect()
    }

    fn clean_threads(&self, x: Vertex, max_len: usize) -> Option<Vec<Thread>> {
        let ths = self.map.threads_at(x);
        ths.iter().all(|t| !t.is_cycle() && t.len() <= max_len).then_some(ths)
    }

    fn equal_endpoint(&mut self) -> bool {
        let map = self.map;
        for th in map.threads.iter().filter(|t| t.is_cycle()) {
            let v0 = th.start;
            let mut closed = th.path();
            let cfg = if self.g.degree(v0) >= 4 {
                Config::new(ConfigKind::EqualEndpointThread, th.interior.clone(), vec![Step::LongThread { path: closed }])
            } else {
                let first = th.interior[0];
                let last = th.interior[th.len() - 1];
                let Some(&x) = self.g.neighbors(v0).iter().find(|&&w| w != first && w != last) else { continue };
                closed.pop();
                if self.g.degree(x) >= 3 {
                    Config::new(
                        ConfigKind::EqualEndpointThread,
                        closed.clone(),
                        vec![Step::CyclicBlock { cycle: closed, outside: x }],
                    )
                } else {
                    let Some(q) = map.thread_of(x) else { continue };
                    if q.is_cycle() {
                        continue;
                    }
                    let q = q.from_end(v0);
                    let mut deletion = closed.clone();
                    deletion.extend(q.interior.iter().copied());
                    Config::new(
                        ConfigKind::EqualEndpointThread,
                        deletion,
                        vec![Step::OpenPath { path: q.path() }, Step::LongThread { path: th.path() }],
                    )
                }
            };
            if self.emit(cfg) {
                return true;
            }
        }
        false
    }

    fn long_threads(&mut self, kind: ConfigKind) -> bool {
        let ths: Vec<Thread> = self
            .map
            .threads
            .iter()
            .filter(|t| {
                !t.is_cycle()
                    && match kind {
                        ConfigKind::M3LongThread => t.len() == 3 || t.len() >= 5,
                        _ => t.len() >= 3,
                    }
            })
            .cloned()
            .collect();
        for th in ths {
            if self.emit(Config::new(kind, th.interior.clone(), vec![Step::LongThread { path: th.path() }])) {
                return true;
            }
        }
        false
    }

    fn overloads(&mut self) -> bool {
        for x in self.branch_vertices() {
            let Some(ths) = self.clean_threads(x, 2) else { continue };
            let t: usize = ths.iter().map(Thread::len).sum();
            let by_len = |l: usize| ths.iter().filter(|th| th.len() == l).cloned().collect::<Vec<_>>();
            let (twos, ones, zeros) = (by_len(2), by_len(1), by_len(0));
            let interiors = |list: &[&Thread]| list.iter().flat_map(|th| th.interior.clone()).collect::<Vec<_>>();
            let cfg = match ths.len() {
                4 if t >= 6 => Some(self.four_vertex(x, &twos, &ones, &zeros, interiors)),
                3 if t >= 3 => self.three_vertex(x, &twos, &ones, &zeros, t),
                _ => None,
            };
            if let Some(cfg) = cfg {
                if self.emit(cfg) {
                    return true;
                }
            }
        }
        false
    }

    fn four_vertex(
        &self,
        x: Vertex,
        twos: &[Thread],
        ones: &[Thread],
        zeros: &[Thread],
        interiors: impl Fn(&[&Thread]) -> Vec<Vertex>,
    ) -> Config {
        let kind = ConfigKind::FourVertexOverload;
        if twos.len() >= 3 {
            let fourth = twos.get(3).or(ones.first()).or(zeros.first()).expect("four threads");
            let all: Vec<&Thread> = twos.iter().take(3).chain([fourth]).collect();
            let mut deletion = interiors(&all);
            deletion.push(x);
            if fourth.is_empty() {
                Config::new(
                    kind,
                    deletion,
                    vec![
                        Step::Thread45 { path: glue(&twos[1], x, &twos[2]), x, avoid: vec![twos[0].end, fourth.end] },
                        Step::Thread2 { path: arr4(path_of(&twos[0])) },
                    ],
                )
            } else {
                Config::new(
                    kind,
                    deletion,
                    vec![
                        Step::Thread45 { path: glue(&twos[2], x, fourth), x, avoid: vec![twos[0].end, twos[1].end] },
                        Step::Thread2 { path: arr4(path_of(&twos[1])) },
                        Step::Thread2 { path: arr4(path_of(&twos[0])) },
                    ],
                )
            }
        } else {
            // two 2-threads and two 1-threads
            let all: Vec<&Thread> = twos.iter().chain(ones).collect();
            let mut deletion = interiors(&all);
            deletion.push(x);
            Config::new(
                kind,
                deletion,
                vec![
                    Step::Thread45 { path: glue(&ones[0], x, &twos[1]), x, avoid: vec![twos[0].end, ones[1].end] },
                    Step::Thread21 { two: arr4(path_of(&twos[0])), one: arr3(path_of(&ones[1])) },
                ],
            )
        }
    }

    fn three_vertex(&self, x: Vertex, twos: &[Thread], ones: &[Thread], zeros: &[Thread], t: usize) -> Option<Config> {
        let kind = ConfigKind::ThreeVertexOverload;
        let profile = (twos.len(), ones.len(), zeros.len());
        match profile {
            (1, 2, 0) => {
                if self.m < 5 {
                    return None;
                }
                let (x1, x2) = (ones[0].interior[0], ones[1].interior[0]);
                let (x3, x4) = (twos[0].interior[0], twos[0].interior[1]);
                Some(Config::new(
                    kind,
                    [x, x1, x2, x3, x4],
                    vec![Step::Assign { targets: vec![x1, x2, x4, x, x3], ranks: vec![1, 2, 3, 4, 5], avoid: vec![] }],
                ))
            }
            (0, 3, 0) => {
                let xs: Vec<Vertex> = ones.iter().map(|th| th.interior[0]).collect();
                let mut targets = xs.clone();
                targets.push(x);
                Some(Config::new(kind, targets.clone(), vec![Step::Assign { targets, ranks: vec![1, 2, 3, 4], avoid: vec![] }]))
            }
            _ if !twos.is_empty() && t >= 5 => {
                let first = &twos[0];
                let others: Vec<&Thread> = twos[1..].iter().chain(ones).collect();
                let path = glue(others[0], x, others[1]);
                let deletion: Vec<Vertex> = path[1..path.len() - 1].iter().chain(&first.interior).copied().collect();
                Some(Config::new(
                    kind,
                    deletion,
                    vec![
                        Step::Thread45 { path, x, avoid: vec![first.end] },
                        Step::Thread2 { path: arr4(first.path()) },
                    ],
                ))
            }
            _ if !twos.is_empty() && zeros.len() == 1 => {
                let others: Vec<&Thread> = twos.iter().chain(ones).collect();
                let path = glue(others[0], x, others[1]);
                let deletion: Vec<Vertex> = path[1..path.len() - 1].to_vec();
                Some(Config::new(kind, deletion, vec![Step::Thread45 { path, x, avoid: vec![zeros[0].end] }]))
            }
            _ => None,
        }
    }

    /// Profile `(1, 2, 0)` at a 3-vertex with no longer threads.
    fn is_bad_m4(&self, x: Vertex) -> bool {
        self.g.degree(x) == 3 && self.clean_threads(x, 2).is_some_and(|ths| lens(&ths) == [1, 1, 2])
    }

    fn bad_neighborhoods(&mut self) -> bool {
        for x in self.branch_vertices() {
            if !self.is_bad_m4(x) {
                continue;
            }
            let ths = self.map.threads_at(x);
            let two = ths.iter().find(|t| t.len() == 2).unwrap().clone();
            let ones: Vec<Thread> = ths.iter().filter(|t| t.len() == 1).cloned().collect();
            for k in 0..2 {
                let (conn, other) = (&ones[k], &ones[1 - k]);
                let y = conn.end;
                let Some(yths) = self.clean_threads(y, 2) else { continue };
                let x4 = conn.interior[0];
                let (x1, x2, u1) = (two.interior[0], two.interior[1], two.end);
                let (x3, u2) = (other.interior[0], other.end);
                let rest: Vec<Thread> = yths.iter().filter(|t| t.interior != [x4]).cloned().collect();
                let cfg = match yths.len() {
                    3 => {
                        let t: usize = yths.iter().map(Thread::len).sum();
                        let l = lens(&rest);
                        if t < 2 || !(l == [0, 1] || l == [1, 2]) {
                            continue;
                        }
                        let one = rest.iter().find(|t| t.len() == 1).unwrap();
                        let third = rest.iter().find(|t| t.len() != 1).unwrap();
                        let y1 = one.interior[0];
                        let mut deletion = vec![x, y, y1, x1, x2, x3, x4];
                        let mut steps = Vec::new();
                        if third.len() == 2 {
                            let (y2, y3) = (third.interior[0], third.interior[1]);
                            deletion.extend([y2, y3]);
                            steps.push(Step::Assign { targets: vec![y3, y2], ranks: vec![1, 2], avoid: vec![] });
                        }
                        steps.push(Step::Assign {
                            targets: vec![x, y, y1, x4],
                            ranks: vec![1, 2, 3, 4],
                            avoid: vec![(x, vec![u1, u2])],
                        });
                        steps.push(Step::Thread21 { two: arr4(two.path()), one: arr3(other.path()) });
                        Config::new(ConfigKind::BadNeighborhood, deletion, steps)
                    }
                    4 => {
                        let Some(zconn) = rest.iter().find(|t| t.len() == 1 && t.end != x && t.end != y && self.is_bad_m4(t.end)) else {
                            continue;
                        };
                        let z = zconn.end;
                        let y1 = zconn.interior[0];
                        let zths = self.map.threads_at(z);
                        let ztwo = zths.iter().find(|t| t.len() == 2).unwrap();
                        let Some(zone) = zths.iter().find(|t| t.len() == 1 && t.interior != [y1]) else { continue };
                        let (z1, z2, u3) = (ztwo.interior[0], ztwo.interior[1], ztwo.end);
                        let (z3, u4) = (zone.interior[0], zone.end);
                        let remaining: Vec<&Thread> = rest.iter().filter(|t| t.interior != [y1]).collect();
                        let mut deletion = vec![x, y, z, y1, x1, x2, x3, x4, z1, z2, z3];
                        let mut steps = Vec::new();
                        let mut singles = Vec::new();
                        for r in &remaining {
                            deletion.extend(r.interior.iter().copied());
                            match r.len() {
                                2 => steps.push(Step::Assign {
                                    targets: vec![r.interior[1], r.interior[0]],
                                    ranks: vec![1, 2],
                                    avoid: vec![],
                                }),
                                1 => singles.push(r.interior[0]),
                                _ => {}
                            }
                        }
                        let x_part = Step::Thread45 { path: vec![u1, x2, x1, x, x3, u2], x, avoid: vec![x4] };
                        let z_part = Step::Thread45 { path: vec![u3, z2, z1, z, z3, u4], x: z, avoid: vec![y1] };
                        match singles.len() {
                            0 => {
                                steps.push(Step::Assign {
                                    targets: vec![y, x, x4, y1],
                                    ranks: vec![1, 2, 3, 4],
                                    avoid: vec![(x, vec![u1, u2])],
                                });
                                steps.push(z_part);
                                steps.push(Step::Thread21 { two: arr4(two.path()), one: arr3(other.path()) });
                            }
                            1 => {
                                steps.push(Step::Assign { targets: vec![x4, y, y1, singles[0]], ranks: vec![1, 2, 3, 4], avoid: vec![] });
                                steps.push(x_part);
                                steps.push(z_part);
                            }
                            _ => {
                                steps.push(Step::Assign {
                                    targets: vec![singles[0], singles[1], y, x4, y1],
                                    ranks: vec![1, 2, 3, 4, 1],
                                    avoid: vec![],
                                });
                                steps.push(x_part);
                                steps.push(z_part);
                            }
                        }
                        Config::new(ConfigKind::BadNeighborhood, deletion, steps)
                    }
                    _ => continue,
                };
                if self.emit(cfg) {
                    return true;
                }
            }
        }
        false
    }

    fn m3_threads(&self, x: Vertex) -> Option<Vec<Thread>> {
        let ths = self.map.threads_at(x);
        ths.iter().all(|t| !t.is_cycle() && [0, 1, 2, 4].contains(&t.len())).then_some(ths)
    }

    fn is_bad_m3(&self, x: Vertex) -> bool {
        self.g.degree(x) == 3 && self.m3_threads(x).is_some_and(|ths| lens(&ths) == [1, 1, 4])
    }

    fn star_violations(&mut self) -> bool {
        for x in self.branch_vertices() {
            let d = self.g.degree(x);
            let Some(ths) = self.m3_threads(x) else { continue };
            if !(3..=6).contains(&d) {
                continue;
            }
            let a = |l: usize| ths.iter().filter(|t| t.len() == l).count();
            if a(0) > 1 {
                continue;
            }
            let s = 1 + ths.iter().map(Thread::len).sum::<usize>();
            let eps = 3 * s.div_ceil(3) - s;
            if 2 * a(4) + a(2) < a(1) + 1 + eps || a(4) + 4 < d {
                continue;
            }
            let threads: Vec<Vec<Vertex>> = ths.iter().filter(|t| !t.is_empty()).map(|t| t.interior.clone()).collect();
            let deletion: Vec<Vertex> = std::iter::once(x).chain(threads.iter().flatten().copied()).collect();
            let cfg = Config::new(ConfigKind::M3StarViolation, deletion, vec![Step::Star { root: x, threads, a0: a(0) }]);
            if self.emit(cfg) {
                return true;
            }
        }
        false
    }

    fn bad_pairs(&mut self) -> bool {
        for x in self.branch_vertices() {
            if !self.is_bad_m3(x) {
                continue;
            }
            let ths = self.map.threads_at(x);
            for conn in ths.iter().filter(|t| t.len() == 1) {
                let y = conn.end;
                if y == x || self.g.degree(y) != 3 {
                    continue;
                }
                let Some(yths) = self.m3_threads(y) else { continue };
                let w = conn.interior[0];
                let rest: Vec<&Thread> = yths.iter().filter(|t| t.interior != [w]).collect();
                if !rest.iter().any(|t| t.len() >= 2) {
                    continue;
                }
                let a0 = rest.iter().filter(|t| t.is_empty()).count();
                if a0 > 1 {
                    continue;
                }
                let x_threads: Vec<Vec<Vertex>> = ths.iter().filter(|t| t.interior != [w]).map(|t| t.interior.clone()).collect();
                let y_threads: Vec<Vec<Vertex>> = rest.iter().filter(|t| !t.is_empty()).map(|t| t.interior.clone()).collect();
                let all = || x_threads.iter().chain(&y_threads);
                let b = |l: usize| all().filter(|t| t.len() == l).count();
                let s = 3 + all().map(Vec::len).sum::<usize>();
                let eps = 3 * s.div_ceil(3) - s;
                let dsum = x_threads.len() + 1 + y_threads.len() + 1 + a0;
                if dsum > 8 || 2 * b(4) + b(2) + 1 < b(1) + eps || b(4) < 1 {
                    continue;
                }
                let deletion: Vec<Vertex> = [x, y, w].into_iter().chain(all().flatten().copied()).collect();
                let cfg = Config::new(
                    ConfigKind::M3BadPairThread,
                    deletion,
                    vec![Step::Pair { x, y, connector: w, x_threads, y_threads, a0 }],
                );
                if self.emit(cfg) {
                    return true;
                }
            }
        }
        false
    }

    fn double_bads(&mut self) -> bool {
        for x in self.branch_vertices() {
            if !self.is_bad_m3(x) {
                continue;
            }
            let ths = self.map.threads_at(x);
            let xfour = ths.iter().find(|t| t.len() == 4).unwrap();
            for k in 0..2 {
                let xones: Vec<&Thread> = ths.iter().filter(|t| t.len() == 1).collect();
                let (conn, xother) = (xones[k], xones[1 - k]);
                let y = conn.end;
                if y == x || self.g.degree(y) != 3 {
                    continue;
                }
                let Some(yths) = self.m3_threads(y) else { continue };
                let w2 = conn.interior[0];
                let rest: Vec<&Thread> = yths.iter().filter(|t| t.interior != [w2]).collect();
                for j in 0..rest.len() {
                    let zconn = rest[j];
                    let third = rest[1 - j];
                    let z = zconn.end;
                    if zconn.len() != 1 || z == x || z == y || !self.is_bad_m3(z) || third.len() > 1 {
                        continue;
                    }
                    let w3 = zconn.interior[0];
                    let zths = self.map.threads_at(z);
                    let zfour = zths.iter().find(|t| t.len() == 4).unwrap();
                    let Some(zother) = zths.iter().find(|t| t.len() == 1 && t.interior != [w3]) else { continue };
                    let path = [xother.end, xother.interior[0], x, w2, y, w3, z, zother.interior[0], zother.end];
                    let x_thread: [Vertex; 4] = xfour.interior.clone().try_into().unwrap();
                    let z_thread: [Vertex; 4] = zfour.interior.clone().try_into().unwrap();
                    let y_extra = third.interior.first().copied();
                    let shape = DoubleBadShape { path, x_thread, z_thread, y_extra };
                    let deletion = crate::lemmas::double_bad_vertices(&shape);
                    let cfg = Config::new(
                        ConfigKind::M3DoubleBad,
                        deletion,
                        vec![Step::DoubleBad { path, x_thread, z_thread, y_extra }],
                    );
                    if self.emit(cfg) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

fn lens(ths: &[Thread]) -> Vec<usize> {
    let mut l: Vec<usize> = ths.iter().map(Thread::len).collect();
    l.sort_unstable();
    l
}

/// Runs the priority scan. With `first_only` it stops at the first
/// admissible configuration.
pub(crate) fn scan(g: &Graph, map: &ThreadMap, m: usize, mode: Mode, first_only: bool) -> Vec<Config> {
    let mut s = Scanner { g, map, m, first_only, found: Vec::new() };
    match mode {
        Mode::M4 => {
            let _ = s.equal_endpoint()
                || s.long_threads(ConfigKind::LongThread)
                || s.overloads()
                || (m == 4 && s.bad_neighborhoods());
        }
        Mode::M3 => {
            let _ = s.equal_endpoint()
                || s.long_threads(ConfigKind::M3LongThread)
                || s.star_violations()
                || s.bad_pairs()
                || s.double_bads();
        }
    }
    s.found
}
