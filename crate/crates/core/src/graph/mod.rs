//! Simple undirected graphs over adjacency bitsets.

mod dimacs;
mod order;
mod random;

pub use dimacs::{parse_dimacs, parse_dimacs_str, write_dimacs, DimacsError, ParsedDimacs};
pub use order::{degree_desc_order, mcr_init_order, ordering, OrderingKind};
pub use random::random_gnp;

use crate::bitset::BitSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("ordering of length {len} is not a permutation of 0..{n}")]
    NotAPermutation { len: usize, n: usize },
}

/// Adjacency rows are bitsets; `adj[v]` is the neighborhood of `v`.
///
/// `labels[v]` is the id `v` had in the graph this one was derived from, so
/// results computed on a renumbered graph can be reported in the caller's
/// numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
    edges: usize,
    labels: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BitSet::new(n); n],
            edges: 0,
            labels: (0..n).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from 0-based edges. Self-loops and repeats are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Inserts `{u, v}`. Returns false for self-loops and already present edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n() && v < self.n(), "edge ({u}, {v}) out of range");
        if u == v || self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].add(v);
        self.adj[v].add(u);
        self.edges += 1;
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// All neighborhoods, indexed by vertex.
    #[inline]
    pub fn adjacency(&self) -> &[BitSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].cardinality()
    }

    pub fn density(&self) -> f64 {
        let n = self.n();
        if n < 2 {
            return 0.0;
        }
        2.0 * self.edges as f64 / (n as f64 * (n - 1) as f64)
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Full vertex set.
    pub fn vertices(&self) -> BitSet {
        BitSet::full(self.n())
    }

    /// Ascending list of 0-based edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// True when the given vertices are pairwise adjacent.
    pub fn is_clique<I: IntoIterator<Item = usize>>(&self, vertices: I) -> bool {
        let vs: Vec<usize> = vertices.into_iter().collect();
        vs.iter().enumerate().all(|(i, &u)| {
            u < self.n() && vs[i + 1..].iter().all(|&v| v < self.n() && self.has_edge(u, v))
        })
    }

    /// New graph where vertex `i` is the old vertex `perm[i]`.
    pub fn renumber(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        let not_perm = GraphError::NotAPermutation { len: perm.len(), n };
        if perm.len() != n {
            return Err(not_perm);
        }
        let mut inverse = vec![usize::MAX; n];
        for (new, &old) in perm.iter().enumerate() {
            if old >= n || inverse[old] != usize::MAX {
                return Err(not_perm);
            }
            inverse[old] = new;
        }
        let adj = perm
            .iter()
            .map(|&old| BitSet::from_elements(n, self.adj[old].iter().map(|u| inverse[u])))
            .collect();
        Ok(Graph {
            adj,
            edges: self.edges,
            labels: perm.iter().map(|&old| self.labels[old]).collect(),
        })
    }

    /// Checks symmetry, irreflexivity and the edge tally.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        let mut total = 0;
        for v in 0..n {
            if self.adj[v].universe() != n || self.adj[v].contains(v) {
                return false;
            }
            for u in self.adj[v].iter() {
                if !self.adj[u].contains(v) {
                    return false;
                }
            }
            total += self.adj[v].cardinality();
        }
        total == 2 * self.edges && self.labels.len() == n
    }
}
