//! One check per acceptance criterion. Each check panics with a description
//! of the first failure and otherwise returns a one-line summary.

use std::time::{Duration, Instant};

use equicolor::discharge::{audit, Verdict};
use equicolor::generators::{all_gadgets, family, FamilyParams};
use equicolor::metrics::{mad_exact, Rational};
use equicolor::oracle::Oracle;
use equicolor::solver::{equitable_color, equitable_color_with, find_config, upper_threshold, ConfigKind, Mode, SolverOptions};
use equicolor::{verify_equitable, Graph};

use super::Case;

fn fam(name: &str, params: &[usize]) -> Graph {
    family(name, &FamilyParams::list(params)).unwrap()
}

/// Colors every graph for every count in `counts(n)` and verifies the
/// result, failing when one instance exceeds `limit`.
pub fn solver_sweep(corpus: &[Case], counts: impl Fn(usize) -> Vec<usize>, limit: Duration, min_graphs: usize) -> String {
    assert!(corpus.len() >= min_graphs, "corpus has {} graphs, need {min_graphs}", corpus.len());
    let mut instances = 0;
    let mut slowest = Duration::ZERO;
    let mut largest = 0;
    for case in corpus {
        let n = case.graph.order();
        largest = largest.max(n);
        for m in counts(n) {
            let start = Instant::now();
            let f = equitable_color(&case.graph, m).unwrap_or_else(|e| panic!("{} with m={m}: {e}", case.name));
            let elapsed = start.elapsed();
            let report = verify_equitable(&case.graph, &f).unwrap();
            assert!(report.valid, "{} with m={m}: {:?}", case.name, report.violations);
            assert!(elapsed < limit, "{} with m={m} took {elapsed:?}", case.name);
            slowest = slowest.max(elapsed);
            instances += 1;
        }
    }
    format!("{} graphs up to {largest} vertices, {instances} instances, slowest {:.3}s", corpus.len(), slowest.as_secs_f64())
}

/// Counts `{4..=8} ∪ {n-1, n}`.
pub fn counts_m4(n: usize) -> Vec<usize> {
    let mut ms: Vec<usize> = (4..=8).chain([n - 1, n]).collect();
    ms.sort_unstable();
    ms.dedup();
    ms
}

/// Every count the solver accepts on a small graph must be confirmed
/// feasible by exhaustive search.
pub fn oracle_agreement(corpus: &[Case]) -> String {
    let oracle = Oracle::with_cap(20);
    let mut checked = 0;
    for case in corpus {
        let g = &case.graph;
        let n = g.order();
        assert!(n <= 20, "{} has {n} vertices", case.name);
        for m in 3..=n {
            let Ok(f) = equitable_color(g, m) else { continue };
            assert!(verify_equitable(g, &f).unwrap().valid, "{} m={m}", case.name);
            let search = oracle.equitable(g, m).unwrap();
            let w = search.witness.unwrap_or_else(|| panic!("oracle finds no equitable {m}-coloring of {}", case.name));
            assert!(verify_equitable(g, &w).unwrap().valid, "oracle witness for {} m={m}", case.name);
            checked += 1;
        }
    }
    format!("{} graphs, {checked} (graph, m) pairs, 0 disagreements", corpus.len())
}

/// Thresholds of small complete bipartite graphs.
pub fn oracle_fixtures(limit: Duration) -> String {
    let start = Instant::now();
    let oracle = Oracle::with_cap(24);
    for n in 2..=10 {
        let t = oracle.threshold(&fam("kab", &[2, n])).unwrap();
        assert_eq!(t.chi_eq_star, n.div_ceil(3) + 1, "K2,{n}");
    }
    for n in 1..=9 {
        let t = oracle.threshold(&fam("star", &[n])).unwrap();
        for k in 1..=5 {
            let feasible = k > n + 1 || t.per_k[&k];
            assert_eq!(!feasible, n + 1 >= 2 * k, "K1,{n} with k={k}");
        }
    }
    let t = oracle.threshold(&fam("kab", &[7, 7])).unwrap();
    assert_eq!((t.chi_eq, t.chi_eq_star), (2, 8), "K7,7");
    assert!(!t.per_k[&1]);
    let bad: Vec<usize> = t.per_k.iter().filter(|(&k, ok)| k > t.chi_eq && !**ok).map(|(k, _)| *k).collect();
    assert_eq!(bad, vec![3, 5, 7], "K7,7 infeasible counts above the equitable chromatic number");
    let elapsed = start.elapsed();
    assert!(elapsed < limit, "fixtures took {elapsed:?}");
    format!("K2,n for n=2..10, K1,n for n<=9 and k<=5, K7,7 in {:.1}s", elapsed.as_secs_f64())
}

/// Conservation on every graph; negative total and no falsified vertex on
/// graphs inside the covered range.
pub fn discharging(corpus: &[Case], mode: Mode, in_range: bool) -> String {
    let d0 = match mode {
        Mode::M4 => Rational::new(5, 2),
        Mode::M3 => Rational::new(7, 3),
    };
    let mut negative_vertices = 0;
    for case in corpus {
        let g = &case.graph;
        let report = audit(g, mode).unwrap_or_else(|e| panic!("{}: {e}", case.name));
        assert!(report.conserved, "{}: charge not conserved", case.name);
        if mad_exact(g).unwrap() < d0 {
            assert!(report.total_negative, "{}: total charge {} is not negative", case.name, report.total_initial);
        }
        if in_range {
            assert_eq!(report.falsified, 0, "{}: falsified vertices {:?}", case.name, report.negative);
            assert!(report.negative.iter().all(|v| v.verdict != Verdict::Falsified));
        }
        negative_vertices += report.negative.len();
    }
    format!("{} graphs, {negative_vertices} negative vertices", corpus.len())
}

/// Each gadget's first configuration is its declared kind, every kind has a
/// gadget, and coloring the gadget runs that kind's extension.
pub fn gadget_coverage() -> String {
    let gadgets = all_gadgets();
    for kind in ConfigKind::ALL {
        assert!(gadgets.iter().any(|g| g.kind == kind), "no gadget for {kind:?}");
    }
    for gd in &gadgets {
        assert_eq!(upper_threshold(&gd.graph).unwrap().map(|t| t <= gd.colors), Some(true), "{} is out of range", gd.name);
        let cfg = find_config(&gd.graph, gd.colors).unwrap();
        assert_eq!(cfg.kind, gd.kind, "{}", gd.name);
        let opts = SolverOptions { check_invariants: true, unchecked: false, trace: true };
        let sol = equitable_color_with(&gd.graph, gd.colors, &opts).unwrap_or_else(|e| panic!("{}: {e}", gd.name));
        assert!(sol.trace.iter().any(|t| t.kind == gd.kind), "{}: kind never reduced", gd.name);
        assert!(verify_equitable(&gd.graph, &sol.coloring).unwrap().valid, "{}", gd.name);
    }
    format!("{} gadgets covering all {} kinds", gadgets.len(), ConfigKind::ALL.len())
}
