//! Instance sources for the suites: exhaustive labeled graphs and seeded
//! random graphs.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// All `2^(n choose 2)` labeled graphs on `n` vertices. Bit `i` of the index
/// selects the `i`-th pair in lexicographic order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::new(n, &edges).expect("pairs are valid")
    })
}

/// `G(n, p)` with the given generator.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("pairs are valid")
}

/// A random graph with `n` drawn from `sizes` and edge density drawn from
/// `[0.15, 0.85]`.
pub fn random_graph_in(rng: &mut ChaCha8Rng, sizes: std::ops::RangeInclusive<usize>) -> Graph {
    let n = rng.gen_range(sizes);
    let p = rng.gen_range(0.15..0.85);
    random_graph(rng, n, p)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, &edges).expect("petersen edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(all_labeled_graphs(5).count(), 1024);
        assert_eq!(all_labeled_graphs(1).count(), 1);
        assert_eq!(all_labeled_graphs(3).filter(|g| g.m() == 1).count(), 3);
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.m(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn seeded_generation_repeats() {
        let a = random_graph_in(&mut ChaCha8Rng::seed_from_u64(7), 3..=8);
        let b = random_graph_in(&mut ChaCha8Rng::seed_from_u64(7), 3..=8);
        assert_eq!(a, b);
    }
}
