//! Immutable simple graphs on dense vertex sets, plus parsing, generators and
//! small-instance corpora.

mod canon;
mod enumerate;
mod generators;
mod graph6;
mod random;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, MAX_CANON_ORDER};
pub use enumerate::{enumerate_graphs, enumerate_trees, tree_canonical_code, GraphStream};
pub use generators::{figure1_removed_edges, generate, GeneratorSpec};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};
pub use random::random_graph;

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored both as per-vertex bitsets and as a sorted,
/// duplicate-free edge list with `u < v` in every pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    edges: Vec<(usize, usize)>,
}

/// Hop distance between two vertices; `None` when unreachable.
pub type Distance = Option<u32>;

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge iterator. Repeated edges collapse into one;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![BitSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// `adj` must be symmetric and irreflexive.
    pub(crate) fn from_adjacency(adj: Vec<BitSet>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            debug_assert!(!row.contains(u));
            for v in row.iter().filter(|&v| v > u) {
                debug_assert!(adj[v].contains(u));
                edges.push((u, v));
            }
        }
        Graph { n, adj, edges }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let r = self.min_degree();
        (self.max_degree() == r).then_some(r)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![BitSet::new(k); k];
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Copy of the graph without the listed edges.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            adj[u].remove(v);
            adj[v].remove(u);
        }
        Graph::from_adjacency(adj)
    }

    /// Image of the graph under `perm`: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v]));
        Graph::from_edges(self.n, edges).expect("permutation preserves validity")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::from_edges(self.n + other.n, edges).expect("valid union")
    }

    pub fn bfs_distances(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs hop distances by repeated breadth-first search.
    pub fn distances(&self) -> Vec<Vec<Distance>> {
        (0..self.n).map(|s| self.bfs_distances(s)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }

    /// Two-colouring `(A1, A2)` with every edge crossing, or `None` if an odd
    /// cycle exists. In each component the side holding its lowest vertex is
    /// assigned to `A1`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.adj[u].iter() {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (v, s) in side.into_iter().enumerate() {
            if s == Some(false) {
                a.push(v);
            } else {
                b.push(v);
            }
        }
        Some((a, b))
    }

    /// Symmetric, irreflexive adjacency with an edge list that matches it.
    pub fn check_invariants(&self) -> bool {
        if self.adj.len() != self.n {
            return false;
        }
        let mut count = 0;
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return false;
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return false;
                }
            }
            count += self.adj[u].len();
        }
        let sorted = self.edges.windows(2).all(|w| w[0] < w[1]);
        let listed = self
            .edges
            .iter()
            .all(|&(u, v)| u < v && v < self.n && self.adj[u].contains(v));
        sorted && listed && count == 2 * self.edges.len()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn edges_are_canonical() {
        let g = Graph::from_edges(4, [(3, 0), (1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2)]);
        assert!(g.check_invariants());
        assert_eq!(g.edge_index(3, 0), Some(1));
        assert_eq!(g.edge_index(2, 3), None);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
    }

    #[test]
    fn path_distances() {
        let d = path(4).distances();
        assert_eq!(d[0][3], Some(3));
        assert_eq!(d[3][0], Some(3));
        let two = Graph::empty(2);
        assert_eq!(two.distances()[0][1], None);
    }

    #[test]
    fn hypercube_antipodal_distance() {
        let q3 = generate(&GeneratorSpec::Hypercube(3)).unwrap();
        assert_eq!(q3.distances()[0b000][0b111], Some(3));
    }

    #[test]
    fn bipartitions() {
        let c4 = generate(&GeneratorSpec::Cycle(4)).unwrap();
        let (a, b) = c4.bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (2, 2));
        assert!(generate(&GeneratorSpec::Cycle(5)).unwrap().bipartition().is_none());
        let q4 = generate(&GeneratorSpec::Hypercube(4)).unwrap();
        let (a, b) = q4.bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (8, 8));
        assert!(a.iter().all(|v| v.count_ones() % 2 == 0));
        assert!(b.iter().all(|v| v.count_ones() % 2 == 1));
    }

    #[test]
    fn bipartition_per_component_lowest_vertex_first() {
        // two components: 0-1 and 2-3; lowest of each on side A
        let g = Graph::from_edges(4, [(0, 1), (3, 2)]).unwrap();
        let (a, b) = g.bipartition().unwrap();
        assert_eq!(a, vec![0, 2]);
        assert_eq!(b, vec![1, 3]);
    }

    #[test]
    fn induced_and_relabel() {
        let p4 = path(4);
        let sub = p4.induced_subgraph(&[3, 2, 0]);
        assert_eq!(sub.edges(), &[(0, 1)]);
        let r = p4.relabel(&[3, 2, 1, 0]);
        assert_eq!(r, p4);
        assert!(p4.is_tree());
        assert!(!Graph::empty(2).is_tree());
    }
}
