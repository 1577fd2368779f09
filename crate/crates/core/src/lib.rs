//! Exact maximum clique search over bit-parallel vertex sets.
//!
//! Two solvers share the same set primitives and partial-coloring bounds:
//! [`rd`] enumerates nested decision subproblems (Russian Dolls) and [`bb`]
//! is a partial-coloring branch and bound.
//!
//! ```
//! use rdclique::{graph::Graph, rd, SolverConfig};
//!
//! let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
//! let result = rd::solve(&g, &SolverConfig::default());
//! assert_eq!(result.omega, 3);
//! assert_eq!(result.witness, vec![0, 1, 2]);
//! ```

pub mod bb;
pub mod bitset;
pub mod coloring;
pub mod config;
pub mod graph;
pub mod oracle;
pub mod rd;
pub mod stats;

pub use bitset::BitSet;
pub use coloring::{ColorClasses, RecolorRange};
pub use config::{Algorithm, ColoringKind, ConfigError, SolverConfig};
pub use graph::{Graph, OrderingKind};
pub use stats::{SearchStats, SolveResult};

/// Runs the requested solver.
pub fn solve(algorithm: Algorithm, g: &Graph, config: &SolverConfig) -> SolveResult {
    match algorithm {
        Algorithm::Rdmc => rd::solve(g, config),
        Algorithm::Pbbmc => bb::solve(g, config),
    }
}
