use crate::graph::{enumerate_graphs, enumerate_trees, Graph};

/// One graph per isomorphism class on `1..=max_n` vertices (`max_n <= 7`).
pub fn graph_corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n.min(7))
        .flat_map(|n| enumerate_graphs(n, true).expect("n in range"))
        .collect()
}

/// Ordered pairs from [`graph_corpus`].
pub fn pair_corpus(max_n: usize) -> Vec<(Graph, Graph)> {
    let gs = graph_corpus(max_n);
    gs.iter()
        .flat_map(|g| gs.iter().map(move |h| (g.clone(), h.clone())))
        .collect()
}

/// One tree per isomorphism class on `1..=max_n` vertices (`max_n <= 9`).
pub fn tree_corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n.min(9))
        .flat_map(|n| enumerate_trees(n, true).expect("n in range"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        // 1 + 2 + 4 + 11 + 34 graphs and 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 trees
        assert_eq!(graph_corpus(5).len(), 52);
        assert_eq!(pair_corpus(4).len(), 18 * 18);
        assert_eq!(tree_corpus(9).len(), 95);
    }
}
