use crate::config::{Algorithm, SolverConfig};
use serde::{Deserialize, Serialize};

/// Counters gathered during one solver run.
///
/// `subproblems_all` counts initial colorings of subproblems (one per
/// decision subproblem of size target at least one for RDMC, one per
/// optimization subproblem for PBBMC); `subproblems_ne` counts those that
/// left some vertex uncolored, i.e. the nonleaf nodes.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub subproblems_all: u64,
    pub subproblems_ne: u64,
    /// Seconds spent searching, renumbering excluded.
    pub elapsed: f64,
    pub max_depth: usize,
    pub interruptions: u64,
    /// Seconds into the search at which the final incumbent was found.
    pub best_found_at: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub algorithm: Algorithm,
    pub omega: usize,
    /// Maximum clique in the input graph's numbering, increasing.
    pub witness: Vec<usize>,
    /// False when the time limit cut the search short; `omega` is then only
    /// a lower bound.
    pub proven: bool,
    pub stats: SearchStats,
    pub config: SolverConfig,
}
