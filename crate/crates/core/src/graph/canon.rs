use super::Graph;

/// Largest order accepted by [`canonical_form`]; the adjacency string of an
/// 11-vertex graph has 55 bits and fits one word.
pub const MAX_CANON_ORDER: usize = 11;

/// Lexicographically least upper-triangle adjacency string over all vertex
/// orderings, read in graph6 column order. Two graphs are isomorphic iff
/// their canonical forms are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    /// Adjacency bits, first bit most significant.
    pub bits: u64,
}

impl CanonicalForm {
    /// The canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let total = self.order * self.order.saturating_sub(1) / 2;
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..self.order {
            for i in 0..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(self.order, edges).expect("canonical bits are valid")
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total: usize,
    perm: Vec<usize>,
    used: Vec<bool>,
    best: Option<u64>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn column(&self, depth: usize, v: usize) -> u64 {
        self.perm[..depth]
            .iter()
            .fold(0u64, |acc, &u| acc << 1 | self.g.has_edge(u, v) as u64)
    }

    fn run(&mut self, depth: usize, prefix: u64, len: usize) {
        if depth == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
                self.best_perm.clone_from(&self.perm);
            }
            return;
        }
        let mut children: Vec<(u64, usize)> = (0..self.n)
            .filter(|&v| !self.used[v])
            .map(|v| (self.column(depth, v), v))
            .collect();
        children.sort_unstable();
        for (col, v) in children {
            let next = prefix << depth | col;
            let next_len = len + depth;
            if let Some(b) = self.best {
                let best_prefix = b >> (self.total - next_len);
                if next > best_prefix {
                    // children are sorted, so later ones are no better
                    break;
                }
            }
            self.perm[depth] = v;
            self.used[v] = true;
            self.run(depth + 1, next, next_len);
            self.used[v] = false;
        }
    }
}

/// Canonical form by branch-and-bound over vertex orderings: the ordering is
/// extended one position at a time and a branch is cut as soon as its fixed
/// prefix exceeds the best complete string found so far.
///
/// Panics if `g.order() > MAX_CANON_ORDER`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form together with an ordering realising it: position `i` of
/// the canonical graph is vertex `order[i]` of `g`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    assert!(n <= MAX_CANON_ORDER, "canonical form supports at most {MAX_CANON_ORDER} vertices");
    let mut s = Search {
        g,
        n,
        total: n * n.saturating_sub(1) / 2,
        perm: vec![0; n],
        used: vec![false; n],
        best: None,
        best_perm: Vec::new(),
    };
    s.run(0, 0, 0);
    (
        CanonicalForm {
            order: n,
            bits: s.best.unwrap_or(0),
        },
        s.best_perm,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, random_graph, GeneratorSpec};

    #[test]
    fn isomorphic_paths_agree() {
        let p = generate(&GeneratorSpec::Path(5)).unwrap();
        let q = p.relabel(&[2, 4, 0, 1, 3]);
        assert_eq!(canonical_form(&p), canonical_form(&q));
        assert_ne!(
            canonical_form(&p),
            canonical_form(&generate(&GeneratorSpec::Star(4)).unwrap())
        );
    }

    #[test]
    fn canonical_graph_is_isomorphic_image() {
        for seed in 0..20 {
            let g = random_graph(7, 1, 2, seed);
            let (form, order) = canonical_labeling(&g);
            let rebuilt = g.induced_subgraph(&order);
            assert_eq!(rebuilt, form.to_graph());
            assert_eq!(canonical_form(&rebuilt), form);
        }
    }

    #[test]
    fn least_string_for_single_edge() {
        // the least string puts the edge in the last column position
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let f = canonical_form(&g);
        assert_eq!(f.bits, 0b001);
    }

    #[test]
    fn degenerate_orders() {
        assert_eq!(canonical_form(&Graph::empty(0)).bits, 0);
        assert_eq!(canonical_form(&Graph::empty(1)).order, 1);
    }
}
