use super::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// G(n, p): every unordered pair becomes an edge independently with
/// probability `p`. Pairs are drawn in lexicographic order from a ChaCha8
/// stream, so `(n, p, seed)` determines the graph.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        assert_eq!(random_gnp(100, 0.0, 3).edge_count(), 0);
        assert_eq!(random_gnp(100, 1.0, 3).edge_count(), 100 * 99 / 2);
        assert_eq!(random_gnp(0, 0.5, 3).n(), 0);
    }

    #[test]
    fn seeded_and_deterministic() {
        let a = random_gnp(60, 0.4, 11);
        assert_eq!(a, random_gnp(60, 0.4, 11));
        assert_ne!(a, random_gnp(60, 0.4, 12));
        assert!(a.is_well_formed());
    }

    #[test]
    fn density_near_p() {
        for seed in 0..5 {
            let d = random_gnp(500, 0.5, seed).density();
            assert!((0.48..=0.52).contains(&d), "seed {seed}: density {d}");
        }
    }
}
