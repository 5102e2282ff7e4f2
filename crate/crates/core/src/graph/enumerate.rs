use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

use super::canon::{canonical_form, CanonicalForm};
use super::Graph;

pub type GraphStream = Box<dyn Iterator<Item = Graph> + Send>;

/// All graphs on `n` vertices.
///
/// Without dedup this yields every labelled graph (`1 <= n <= 6`), in order
/// of the upper-triangle bitmask. With dedup it yields one canonical
/// representative per isomorphism class (`1 <= n <= 7`), sorted by
/// canonical form. Classes are grown one vertex at a time: every graph on
/// `n` vertices is a one-vertex extension of some graph on `n - 1`.
pub fn enumerate_graphs(n: usize, dedup: bool) -> Result<GraphStream> {
    if dedup {
        if !(1..=7).contains(&n) {
            return Err(Error::OutOfRange { what: "n", value: n, range: "1..=7" });
        }
        Ok(Box::new(unlabeled_graphs(n).into_iter().map(|f| f.to_graph())))
    } else {
        if !(1..=6).contains(&n) {
            return Err(Error::OutOfRange { what: "n", value: n, range: "1..=6" });
        }
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let count = 1u64 << pairs.len();
        Ok(Box::new((0..count).map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p);
            Graph::from_edges(n, edges).expect("pairs are in range")
        })))
    }
}

fn unlabeled_graphs(n: usize) -> BTreeSet<CanonicalForm> {
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::empty(1)));
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.to_graph();
            for mask in 0u32..1 << (m - 1) {
                let edges = base
                    .edges()
                    .iter()
                    .copied()
                    .chain((0..m - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, m - 1)));
                let g = Graph::from_edges(m, edges).expect("in range");
                next.insert(canonical_form(&g));
            }
        }
        level = next;
    }
    level
}

/// All trees on `n` vertices (`1 <= n <= 9`).
///
/// Without dedup: every labelled tree, decoded from the `n^(n-2)` Prüfer
/// sequences in lexicographic order. With dedup: one tree per isomorphism
/// class, sorted by [`tree_canonical_code`], grown by attaching a leaf to
/// every vertex of each class on `n - 1` vertices.
pub fn enumerate_trees(n: usize, dedup: bool) -> Result<GraphStream> {
    if !(1..=9).contains(&n) {
        return Err(Error::OutOfRange { what: "n", value: n, range: "1..=9" });
    }
    if n <= 2 {
        let g = Graph::from_edges(n, (n == 2).then_some((0, 1))).expect("valid");
        return Ok(Box::new(std::iter::once(g)));
    }
    if dedup {
        let mut level: BTreeMap<String, Graph> = BTreeMap::new();
        let p2 = Graph::from_edges(2, [(0, 1)]).expect("valid");
        level.insert(tree_canonical_code(&p2), p2);
        for m in 3..=n {
            let mut next = BTreeMap::new();
            for t in level.values() {
                for v in 0..m - 1 {
                    let edges = t.edges().iter().copied().chain([(v, m - 1)]);
                    let g = Graph::from_edges(m, edges).expect("valid");
                    next.entry(tree_canonical_code(&g)).or_insert(g);
                }
            }
            level = next;
        }
        Ok(Box::new(level.into_values()))
    } else {
        let len = n - 2;
        let total = (n as u64).pow(len as u32);
        Ok(Box::new((0..total).map(move |mut code| {
            let mut seq = vec![0usize; len];
            for slot in seq.iter_mut().rev() {
                *slot = (code % n as u64) as usize;
                code /= n as u64;
            }
            prufer_decode(n, &seq)
        })))
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}

/// Isomorphism-invariant string for a tree: the parenthesis encoding of the
/// tree rooted at its center, minimised over the (at most two) centers.
pub fn tree_canonical_code(t: &Graph) -> String {
    let n = t.order();
    if n == 0 {
        return String::new();
    }
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, usize::MAX))
        .min()
        .expect("at least one center")
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for w in t.neighbors(leaf).iter() {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer
}

fn rooted_code(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&w| w != parent)
        .map(|w| rooted_code(t, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_counts() {
        assert_eq!(enumerate_graphs(1, false).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4, false).unwrap().count(), 64);
        assert!(enumerate_graphs(7, false).is_err());
        assert!(enumerate_graphs(0, true).is_err());
    }

    /// Dedup oracle: canonicalise every labelled graph directly.
    fn brute_classes(n: usize) -> BTreeSet<CanonicalForm> {
        enumerate_graphs(n, false)
            .unwrap()
            .map(|g| canonical_form(&g))
            .collect()
    }

    #[test]
    fn unlabeled_counts_match_brute_force() {
        let expected = [1, 2, 4, 11, 34, 156];
        for n in 1..=6 {
            let classes = brute_classes(n);
            assert_eq!(classes.len(), expected[n - 1], "n={n}");
            let grown: BTreeSet<CanonicalForm> = enumerate_graphs(n, true)
                .unwrap()
                .map(|g| canonical_form(&g))
                .collect();
            assert_eq!(grown, classes, "n={n}");
        }
    }

    #[test]
    fn four_vertex_classes_by_hand() {
        // 11 classes on 4 vertices, by edge count: 1,1,2,3,2,1,1
        let mut by_size = [0; 7];
        for g in enumerate_graphs(4, true).unwrap() {
            by_size[g.size()] += 1;
        }
        assert_eq!(by_size, [1, 1, 2, 3, 2, 1, 1]);
    }

    #[test]
    fn seven_vertex_classes() {
        assert_eq!(enumerate_graphs(7, true).unwrap().count(), 1044);
    }

    #[test]
    fn tree_counts() {
        assert_eq!(enumerate_trees(4, false).unwrap().count(), 16);
        assert_eq!(enumerate_trees(2, false).unwrap().count(), 1);
        assert!(enumerate_trees(10, true).is_err());
        let unlabeled = [1, 1, 1, 2, 3, 6, 11, 23, 47];
        for n in 1..=9 {
            let trees: Vec<Graph> = enumerate_trees(n, true).unwrap().collect();
            assert_eq!(trees.len(), unlabeled[n - 1], "n={n}");
            assert!(trees.iter().all(Graph::is_tree));
        }
    }

    #[test]
    fn prufer_dedup_agrees_with_growth() {
        for n in 3..=7 {
            let labelled: BTreeSet<String> = enumerate_trees(n, false)
                .unwrap()
                .inspect(|t| assert!(t.is_tree()))
                .map(|t| tree_canonical_code(&t))
                .collect();
            let grown: BTreeSet<String> = enumerate_trees(n, true)
                .unwrap()
                .map(|t| tree_canonical_code(&t))
                .collect();
            assert_eq!(labelled, grown, "n={n}");
        }
        // five vertices: path, spider-like S(2,1,1) and star
        assert_eq!(
            enumerate_trees(5, false)
                .unwrap()
                .map(|t| tree_canonical_code(&t))
                .collect::<BTreeSet<_>>()
                .len(),
            3
        );
    }

    #[test]
    fn tree_code_respects_canonical_form() {
        for t in enumerate_trees(7, false).unwrap().step_by(97) {
            let perm: Vec<usize> = (0..7).rev().collect();
            assert_eq!(tree_canonical_code(&t), tree_canonical_code(&t.relabel(&perm)));
        }
    }
}
