//! Exhaustive sweeps of the extension procedures over every boundary color
//! pattern and every admissible list assignment at small sizes. Each sweep
//! panics on the first disagreement and otherwise returns a short summary.

use std::collections::BTreeSet;

use equicolor::coloring::{verify_descending_l, Color, Coloring, ListAssignment};
use equicolor::graph::{Graph, Vertex};
use equicolor::lemmas::{
    extend_2_1_thread, extend_2_thread, extend_45_thread, reduce_pair, reduce_star, LemmaError, PairInstance,
    StarInstance,
};
use equicolor::oracle::Oracle;
use equicolor::verify_equitable;

/// Pads `f` with isolated colored vertices so that class `c` ends with
/// `2 + [c in big]` vertices. `f` must already use each class at most twice.
fn pad(g: &mut Graph, f: &mut Coloring, big: u32, next: &mut Vertex) {
    for c in 1..=f.m() {
        let target = 2 + usize::from(big & (1 << (c - 1)) != 0);
        while f.class_size(c) < target {
            g.add_vertex(*next);
            f.set(*next, c);
            *next += 1;
        }
    }
}

fn path_graph(vs: &[Vertex]) -> Graph {
    Graph::from_edges(vs.iter().copied(), vs.windows(2).map(|w| (w[0], w[1]))).unwrap()
}

/// Big-class patterns that leave the padded coloring equitable: any proper
/// subset of the classes.
fn patterns(m: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << m) - 1
}

fn assert_extends(g: &Graph, f: &Coloring, fresh: &[Vertex], what: &str) {
    let report = verify_equitable(g, f).unwrap();
    assert!(report.valid, "{what}: {:?}", report.violations);
    assert!(fresh.iter().all(|&v| f.contains(v)), "{what}: uncolored vertex");
}

pub fn two_thread_all_boundaries() -> String {
    let mut runs = 0;
    for m in 4..=6 {
        for fx in 1..=m {
            for fy in (1..=m).filter(|&c| c != fx) {
                for big in patterns(m) {
                    let mut g = path_graph(&[0, 1, 2, 3]);
                    let mut f = Coloring::new(m).unwrap();
                    f.set(0, fx);
                    f.set(3, fy);
                    let mut next = 4;
                    pad(&mut g, &mut f, big, &mut next);
                    extend_2_thread(&g, &mut f, [0, 1, 2, 3]).unwrap();
                    assert_extends(&g, &f, &[1, 2], &format!("m={m} fx={fx} fy={fy} big={big:b}"));
                    runs += 1;
                }
            }
        }
    }
    assert_eq!(runs, (4 * 3 * 15) + (5 * 4 * 31) + (6 * 5 * 63));
    format!("{runs} boundary patterns")
}

pub fn two_one_thread_all_boundaries() -> String {
    let mut runs = 0;
    for m in 4..=6 {
        for fx in 1..=m {
            for fy in (1..=m).filter(|&c| c != fx) {
                for fz in (1..=m).filter(|&c| c != fx) {
                    for big in patterns(m) {
                        // x = 0, y1 = 1, y2 = 2, y = 3, y3 = 4, z = 5
                        let mut g = path_graph(&[0, 1, 2, 3]);
                        g.add_edge(0, 4).unwrap();
                        g.add_edge(4, 5).unwrap();
                        let mut f = Coloring::new(m).unwrap();
                        f.set(0, fx);
                        f.set(3, fy);
                        f.set(5, fz);
                        if (1..=m).any(|c| f.class_size(c) > 2) {
                            continue;
                        }
                        let mut next = 6;
                        pad(&mut g, &mut f, big, &mut next);
                        extend_2_1_thread(&g, &mut f, [0, 1, 2, 3], [0, 4, 5]).unwrap();
                        assert_extends(&g, &f, &[1, 2, 4], &format!("m={m} x={fx} y={fy} z={fz} big={big:b}"));
                        runs += 1;
                    }
                }
            }
        }
    }
    format!("{runs} boundary patterns")
}

fn avoid_sets(m: usize) -> Vec<Vec<Color>> {
    let mut out = vec![vec![]];
    for a in 1..=m {
        out.push(vec![a]);
        for b in a + 1..=m {
            out.push(vec![a, b]);
        }
    }
    out
}

pub fn thread45_all_boundaries_and_exception_case() -> String {
    let mut exceptions = BTreeSet::new();
    for m in 4..=6 {
        for t in [4, 5] {
            let path: Vec<Vertex> = (0..t + 2).collect();
            for xi in 1..=t {
                for avoid in avoid_sets(m) {
                    for left in 1..=m {
                        for right in 1..=m {
                            for big in patterns(m) {
                                let mut g = path_graph(&path);
                                let mut f = Coloring::new(m).unwrap();
                                f.set(0, left);
                                f.set(t + 1, right);
                                let mut next = t + 2;
                                pad(&mut g, &mut f, big, &mut next);
                                let what = format!("m={m} t={t} x=y{xi} avoid={avoid:?} l={left} r={right} big={big:b}");
                                match extend_45_thread(&g, &mut f, &path, xi, &avoid) {
                                    Ok(()) => {
                                        assert_extends(&g, &f, &path[1..=t], &what);
                                        assert!(!avoid.contains(&f.get(xi).unwrap()), "{what}: x took an avoided color");
                                    }
                                    Err(LemmaError::ExceptionCase) => {
                                        exceptions.insert((m, t, xi));
                                    }
                                    Err(e) => panic!("{what}: {e}"),
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    assert_eq!(exceptions, BTreeSet::from([(4, 5, 2), (4, 5, 4)]));
    format!("exceptions exactly at {exceptions:?}")
}

const PAIRS: [[Color; 2]; 3] = [[1, 2], [1, 3], [2, 3]];

fn set(cs: &[Color]) -> BTreeSet<Color> {
    cs.iter().copied().collect()
}

/// Adds a thread of `len` vertices hanging from `root`, returning its
/// interior listed from the root.
fn hang(g: &mut Graph, root: Vertex, len: usize, next: &mut Vertex) -> Vec<Vertex> {
    let mut prev = root;
    let mut th = Vec::new();
    for _ in 0..len {
        g.add_edge(prev, *next).unwrap();
        th.push(*next);
        prev = *next;
        *next += 1;
    }
    th
}

/// Multisets of thread lengths from {1, 2, 4}, of size at most `k`.
fn length_multisets(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a4 in 0..=k {
        for a2 in 0..=k - a4 {
            for a1 in 0..=k - a4 - a2 {
                let mut v = vec![4; a4];
                v.extend(vec![2; a2]);
                v.extend(vec![1; a1]);
                out.push(v);
            }
        }
    }
    out
}

fn eps(s: usize) -> usize {
    3 * s.div_ceil(3) - s
}

fn count(lens: &[usize], l: usize) -> usize {
    lens.iter().filter(|&&x| x == l).count()
}

/// Every list assignment with 2-lists on `leaves`, lists of size at least 2
/// on `flexible` and full lists elsewhere.
fn all_lists(g: &Graph, leaves: &[Vertex], flexible: &[Vertex]) -> Vec<ListAssignment> {
    let flex_choices: Vec<BTreeSet<Color>> = PAIRS.iter().map(|p| set(p)).chain([set(&[1, 2, 3])]).collect();
    let total = 3usize.pow(leaves.len() as u32) * 4usize.pow(flexible.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut lists = ListAssignment { lists: g.vertices().map(|v| (v, set(&[1, 2, 3]))).collect() };
            for &leaf in leaves {
                lists.lists.insert(leaf, set(&PAIRS[code % 3]));
                code /= 3;
            }
            for &v in flexible {
                lists.lists.insert(v, flex_choices[code % 4].clone());
                code /= 4;
            }
            lists
        })
        .collect()
}

#[derive(Default, Debug)]
struct Tally {
    instances: usize,
    list_cases: usize,
    rejected: usize,
    rejected_with_infeasible_list: usize,
}

pub fn reduce_star_agrees_with_oracle() -> String {
    let oracle = Oracle::with_cap(24);
    let mut tally = Tally::default();
    for lens in length_multisets(6) {
        let s = 1 + lens.iter().sum::<usize>();
        if lens.is_empty() || s > 15 {
            continue;
        }
        let mut g = Graph::with_vertices([0]);
        let mut next = 1;
        let threads: Vec<Vec<Vertex>> = lens.iter().map(|&l| hang(&mut g, 0, l, &mut next)).collect();
        let leaves: Vec<Vertex> = threads.iter().map(|t| *t.last().unwrap()).collect();
        let cases = all_lists(&g, &leaves, &[0]);
        let feasible: Vec<bool> = cases.iter().map(|l| oracle.descending_l(&g, l, 3).unwrap().feasible()).collect();
        for a0 in 0..=6 - lens.len() {
            let d = lens.len() + a0;
            let (a4, a2, a1) = (count(&lens, 4), count(&lens, 2), count(&lens, 1));
            let admissible = 2 * a4 + a2 >= a1 + 1 + eps(s) && a4 + 4 >= d;
            let inst = StarInstance { root: 0, threads: threads.clone(), a0 };
            if !admissible {
                assert!(matches!(reduce_star(&g, &cases[0], &inst), Err(LemmaError::PreconditionViolated(_))));
                tally.rejected += 1;
                if feasible.iter().any(|ok| !ok) {
                    tally.rejected_with_infeasible_list += 1;
                }
                continue;
            }
            tally.instances += 1;
            for (lists, &ok) in cases.iter().zip(&feasible) {
                let f = reduce_star(&g, lists, &inst).unwrap_or_else(|e| panic!("{lens:?} a0={a0}: {e}"));
                assert!(verify_descending_l(&g, lists, &f).valid, "{lens:?} a0={a0}");
                assert!(ok, "oracle disagrees on {lens:?} a0={a0}");
                tally.list_cases += 1;
            }
        }
    }
    assert!(tally.instances > 0 && tally.rejected_with_infeasible_list > 0, "{tally:?}");
    format!("{tally:?}")
}

pub fn reduce_pair_agrees_with_oracle() -> String {
    let oracle = Oracle::with_cap(24);
    let mut tally = Tally::default();
    for xl in length_multisets(6) {
        for yl in length_multisets(6) {
            let dx = xl.len() + 1;
            let s = 3 + xl.iter().chain(&yl).sum::<usize>();
            if xl.is_empty() || dx + yl.len() + 1 > 8 || s > 15 {
                continue;
            }
            // x = 0, connector = 1, y = 2
            let mut g = path_graph(&[0, 1, 2]);
            let mut next = 3;
            let x_threads: Vec<Vec<Vertex>> = xl.iter().map(|&l| hang(&mut g, 0, l, &mut next)).collect();
            let y_threads: Vec<Vec<Vertex>> = yl.iter().map(|&l| hang(&mut g, 2, l, &mut next)).collect();
            let leaves: Vec<Vertex> = x_threads.iter().chain(&y_threads).map(|t| *t.last().unwrap()).collect();
            let cases = all_lists(&g, &leaves, &[2]);
            let mut feasible: Option<Vec<bool>> = None;
            for a0 in 0..=8 - dx - yl.len() - 1 {
                let (b4, b2) = (count(&xl, 4) + count(&yl, 4), count(&xl, 2) + count(&yl, 2));
                let b1 = count(&xl, 1) + count(&yl, 1);
                let branch = dx >= 3 && yl.len() + 1 + a0 >= 3;
                let admissible = branch && 2 * b4 + b2 + 1 >= b1 + eps(s) && b4 >= 1;
                let inst = PairInstance {
                    x: 0,
                    y: 2,
                    connector: 1,
                    x_threads: x_threads.clone(),
                    y_threads: y_threads.clone(),
                    a0,
                };
                let feasible =
                    feasible.get_or_insert_with(|| cases.iter().map(|l| oracle.descending_l(&g, l, 3).unwrap().feasible()).collect());
                if !admissible {
                    assert!(matches!(reduce_pair(&g, &cases[0], &inst), Err(LemmaError::PreconditionViolated(_))));
                    tally.rejected += 1;
                    if feasible.iter().any(|ok| !ok) {
                        tally.rejected_with_infeasible_list += 1;
                    }
                    continue;
                }
                tally.instances += 1;
                for (lists, &ok) in cases.iter().zip(feasible.iter()) {
                    let f = reduce_pair(&g, lists, &inst).unwrap_or_else(|e| panic!("x {xl:?} y {yl:?} a0={a0}: {e}"));
                    assert!(verify_descending_l(&g, lists, &f).valid, "x {xl:?} y {yl:?}");
                    assert!(ok, "oracle disagrees on x {xl:?} y {yl:?}");
                    tally.list_cases += 1;
                }
            }
        }
    }
    assert!(tally.instances > 0, "{tally:?}");
    format!("{tally:?}")
}

pub fn bad_star_has_an_infeasible_list() -> String {
    // Root with one 4-thread and two 1-threads.
    let mut g = Graph::with_vertices([0]);
    let mut next = 1;
    let threads: Vec<Vec<Vertex>> = [4, 1, 1].iter().map(|&l| hang(&mut g, 0, l, &mut next)).collect();
    let leaves: Vec<Vertex> = threads.iter().map(|t| *t.last().unwrap()).collect();
    let oracle = Oracle::with_cap(24);
    let infeasible = all_lists(&g, &leaves, &[0]).iter().filter(|l| !oracle.descending_l(&g, l, 3).unwrap().feasible()).count();
    assert!(infeasible > 0);
    let inst = StarInstance { root: 0, threads, a0: 0 };
    let full = ListAssignment { lists: g.vertices().map(|v| (v, set(&[1, 2, 3]))).collect() };
    assert!(matches!(reduce_star(&g, &full, &inst), Err(LemmaError::PreconditionViolated(_))));
    format!("{infeasible} infeasible list assignments")
}
