//! Initial vertex orderings. Each returns `perm` with `perm[i]` the vertex
//! that becomes vertex `i` after [`Graph::renumber`].

use super::Graph;
use crate::bitset::BitSet;
use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderingKind {
    Identity,
    #[serde(rename = "deg")]
    DegreeDesc,
    #[serde(rename = "mcr")]
    McrInit,
}

impl OrderingKind {
    pub const ALL: [OrderingKind; 3] = [
        OrderingKind::Identity,
        OrderingKind::DegreeDesc,
        OrderingKind::McrInit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OrderingKind::Identity => "identity",
            OrderingKind::DegreeDesc => "deg",
            OrderingKind::McrInit => "mcr",
        }
    }
}

impl fmt::Display for OrderingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrderingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "identity" => Ok(OrderingKind::Identity),
            "deg" | "degree" => Ok(OrderingKind::DegreeDesc),
            "mcr" => Ok(OrderingKind::McrInit),
            _ => Err(format!("unknown ordering `{s}` (expected identity, deg or mcr)")),
        }
    }
}

pub fn ordering(g: &Graph, kind: OrderingKind) -> Vec<usize> {
    match kind {
        OrderingKind::Identity => (0..g.n()).collect(),
        OrderingKind::DegreeDesc => degree_desc_order(g),
        OrderingKind::McrInit => mcr_init_order(g),
    }
}

/// Nonincreasing degree, ties by increasing id.
pub fn degree_desc_order(g: &Graph) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    perm
}

/// Minimum-degree peeling. Repeatedly removes the residual vertex of least
/// residual degree, ties broken by least sum of its residual neighbors'
/// degrees and then by greatest id. Removed vertices fill the order from the
/// back, so the last vertex peeled comes first and fully tied vertices keep
/// their relative order.
pub fn mcr_init_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut residual = BitSet::full(n);
    let mut perm = vec![0; n];

    for slot in (0..n).rev() {
        let min_degree = residual.iter().map(|v| degree[v]).min().expect("residual nonempty");
        let chosen = residual
            .iter()
            .filter(|&v| degree[v] == min_degree)
            .min_by_key(|&v| {
                let support: usize = g.neighbors(v).inter(&residual).iter().map(|u| degree[u]).sum();
                (support, Reverse(v))
            })
            .expect("some vertex attains the minimum");
        perm[slot] = chosen;
        residual.rem(chosen);
        for u in g.neighbors(chosen).inter(&residual).iter() {
            degree[u] -= 1;
        }
    }
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fixtures, random_gnp};

    fn is_permutation(p: &[usize]) -> bool {
        let mut s = p.to_vec();
        s.sort_unstable();
        s.iter().enumerate().all(|(i, &v)| i == v)
    }

    #[test]
    fn degree_order_cases() {
        let star = Graph::from_edges(4, &[(1, 0), (1, 2), (1, 3)]).unwrap();
        assert_eq!(degree_desc_order(&star)[0], 1);

        let cycle = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(degree_desc_order(&cycle), vec![0, 1, 2, 3, 4]);

        let g = fixtures::example();
        let order = degree_desc_order(&g);
        assert_eq!(order[0], 2);
        assert!(is_permutation(&order));
    }

    #[test]
    fn mcr_on_uniform_graphs_is_identity() {
        let identity: Vec<usize> = (0..6).collect();
        assert_eq!(mcr_init_order(&Graph::new(6)), identity);
        assert_eq!(mcr_init_order(&Graph::complete(6)), identity);
        assert!(mcr_init_order(&Graph::new(0)).is_empty());
    }

    /// Literal restatement of the peeling rule over an adjacency matrix,
    /// recomputing every degree from scratch at each step.
    fn mcr_reference(g: &Graph) -> Vec<usize> {
        let n = g.n();
        let matrix: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
            .collect();
        let mut alive = vec![true; n];
        let mut out = vec![usize::MAX; n];
        for slot in (0..n).rev() {
            let deg = |v: usize, alive: &[bool]| (0..n).filter(|&u| alive[u] && matrix[v][u]).count();
            let mut best: Option<(usize, usize, usize)> = None;
            for v in 0..n {
                if !alive[v] {
                    continue;
                }
                let d = deg(v, &alive);
                let s: usize = (0..n)
                    .filter(|&u| alive[u] && matrix[v][u])
                    .map(|u| deg(u, &alive))
                    .sum();
                // strict `<` on (degree, support) keeps the last tied id
                match best {
                    Some((bd, bs, _)) if (bd, bs) < (d, s) => {}
                    _ => best = Some((d, s, v)),
                }
            }
            let (_, _, v) = best.unwrap();
            out[slot] = v;
            alive[v] = false;
        }
        out
    }

    #[test]
    fn mcr_matches_reference_on_random_graphs() {
        for seed in 0..20 {
            let g = random_gnp(30, 0.5, seed);
            let order = mcr_init_order(&g);
            assert!(is_permutation(&order));
            assert_eq!(order, mcr_reference(&g), "seed {seed}");
        }
        let g = fixtures::example();
        assert_eq!(mcr_init_order(&g), mcr_reference(&g));
    }

    #[test]
    fn parse_kinds() {
        for kind in OrderingKind::ALL {
            assert_eq!(kind.as_str().parse::<OrderingKind>().unwrap(), kind);
        }
        assert!("random".parse::<OrderingKind>().is_err());
    }
}
