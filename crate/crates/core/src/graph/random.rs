use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use super::Graph;

/// Erdős–Rényi sample `G(n, p)` with `p = num/den`.
///
/// Pairs are visited in `(i, j)`, `i < j` lexicographic order and each draws
/// one value from a SplitMix64 stream seeded with `seed`, so a fixed seed
/// reproduces the same graph on every platform.
pub fn random_graph(n: usize, num: u64, den: u64, seed: u64) -> Graph {
    assert!(den > 0 && num <= den, "probability must lie in [0, 1]");
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..den) < num {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range")
}
