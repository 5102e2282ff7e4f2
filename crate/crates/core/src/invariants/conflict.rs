//! Auxiliary graphs whose independent sets are exactly the feasible sets of
//! an edge or vertex packing problem.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConflictKind {
    InducedMatching,
    Eop,
}

/// Conflict graph over the edges of `base`: item `i` is `base.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    pub base: Graph,
    pub kind: ConflictKind,
    pub conflicts: Graph,
}

impl ConflictGraph {
    pub fn items(&self) -> &[(usize, usize)] {
        self.base.edges()
    }
}

/// Is there an edge of `g`, other than `e` and `f`, joining an endvertex of
/// `e` to an endvertex of `f`?
fn common_edge(g: &Graph, e: (usize, usize), f: (usize, usize)) -> bool {
    for a in [e.0, e.1] {
        for b in [f.0, f.1] {
            if a != b && g.has_edge(a, b) {
                let ab = (a.min(b), a.max(b));
                if ab != e && ab != f {
                    return true;
                }
            }
        }
    }
    false
}

fn touches(e: (usize, usize), f: (usize, usize)) -> bool {
    e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1
}

pub fn build_conflict_graph(g: &Graph, kind: ConflictKind) -> ConflictGraph {
    let items = g.edges();
    let m = items.len();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (e, f) = (items[i], items[j]);
            let clash = match kind {
                ConflictKind::InducedMatching => touches(e, f) || common_edge(g, e, f),
                ConflictKind::Eop => common_edge(g, e, f),
            };
            if clash {
                pairs.push((i, j));
            }
        }
    }
    ConflictGraph {
        base: g.clone(),
        kind,
        conflicts: Graph::from_edges(m, pairs).expect("item indices are in range"),
    }
}

/// Vertices conflict when their open neighbourhoods meet.
pub fn open_packing_conflicts(g: &Graph) -> Graph {
    let n = g.order();
    let mut adj = vec![BitSet::new(n); n];
    for u in 0..n {
        for v in u + 1..n {
            if g.neighbors(u).intersects(g.neighbors(v)) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    Graph::from_adjacency(adj)
}

/// Distinct vertices conflict when they lie at distance at most `k`.
pub fn distance_conflicts(g: &Graph, k: u32) -> Graph {
    let n = g.order();
    let mut adj = vec![BitSet::new(n); n];
    for u in 0..n {
        for (v, d) in g.bfs_distances(u).into_iter().enumerate() {
            if v != u && d.is_some_and(|d| d <= k) {
                adj[u].insert(v);
            }
        }
    }
    Graph::from_adjacency(adj)
}
