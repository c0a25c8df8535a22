//! Equitable chromatic numbers and thresholds of small complete bipartite
//! graphs by exhaustive search.

use equicolor::generators::{family, FamilyParams};
use equicolor::oracle::Oracle;

fn main() {
    let oracle = Oracle::from_env();
    for (a, b) in [(2, 5), (3, 3), (7, 7)] {
        let g = family("kab", &FamilyParams::list(&[a, b])).unwrap();
        let t = oracle.threshold(&g).unwrap();
        let bad: Vec<usize> = t.per_k.iter().filter(|(_, ok)| !**ok).map(|(k, _)| *k).collect();
        println!("K{a},{b}: chi_eq {} threshold {} infeasible at {bad:?}", t.chi_eq, t.chi_eq_star);
    }
}
