//! Brute-force maximum clique, kept deliberately naive so the solvers can be
//! checked against it. Exponential; meant for graphs of a few dozen vertices.

use crate::bitset::BitSet;
use crate::graph::Graph;

struct Enumerator {
    adjacent: Vec<Vec<bool>>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Enumerator {
    fn grow(&mut self, candidates: &[usize]) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        for (i, &v) in candidates.iter().enumerate() {
            if self.current.len() + candidates.len() - i <= self.best.len() {
                return;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&u| self.adjacent[v][u])
                .collect();
            // v can only lead to a clique of size |current| + 1 + deg(v)
            if self.current.len() + 1 + next.len() <= self.best.len() {
                continue;
            }
            self.current.push(v);
            self.grow(&next);
            self.current.pop();
        }
    }
}

/// A maximum clique of `G[within]`, as an increasing vertex list.
pub fn brute_force_clique_within(g: &Graph, within: &BitSet) -> Vec<usize> {
    let n = g.n();
    let adjacent = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let vertices: Vec<usize> = (0..n).filter(|&v| within.contains(v)).collect();
    let mut e = Enumerator {
        adjacent,
        current: Vec::new(),
        best: Vec::new(),
    };
    e.grow(&vertices);
    e.best
}

pub fn brute_force_clique(g: &Graph) -> Vec<usize> {
    brute_force_clique_within(g, &g.vertices())
}

pub fn brute_force_omega_within(g: &Graph, within: &BitSet) -> usize {
    brute_force_clique_within(g, within).len()
}

pub fn brute_force_omega(g: &Graph) -> usize {
    brute_force_clique(g).len()
}
