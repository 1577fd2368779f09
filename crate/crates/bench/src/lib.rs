//! Shared inputs for the criterion benches.

use rdclique::graph::{ordering, random_gnp};
use rdclique::{Graph, OrderingKind};

/// Seeded random graphs sized so one solve takes milliseconds, not seconds.
pub fn solver_inputs() -> Vec<(String, Graph)> {
    [(100, 0.5), (100, 0.8), (90, 0.9), (60, 0.95)]
        .into_iter()
        .map(|(n, p)| (format!("gnp_{n}_{p}"), random_gnp(n, p, 1)))
        .collect()
}

/// A dense 200-vertex graph already in the order the solvers would use.
pub fn coloring_input() -> Graph {
    let g = random_gnp(200, 0.9, 1);
    g.renumber(&ordering(&g, OrderingKind::McrInit)).expect("orderings are permutations")
}
