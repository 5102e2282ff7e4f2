//! Graph products with a fixed vertex encoding `(g, h) -> g * |V(H)| + h`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
    /// Rooted product over the given root of the second factor.
    Rooted(usize),
    /// Corona; the second coordinate `0` is the vertex of the first factor and
    /// `1 + h` is the copy of `h`.
    Corona,
}

/// A product graph together with its coordinate bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    pub kind: ProductKind,
    /// Order of the first factor.
    pub gn: usize,
    /// Number of second coordinates (the order of `H`, or `|V(H)| + 1` for a
    /// corona).
    pub hn: usize,
}

impl ProductGraph {
    #[inline]
    pub fn encode(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.gn && h < self.hn);
        g * self.hn + h
    }

    #[inline]
    pub fn decode(&self, v: usize) -> (usize, usize) {
        (v / self.hn, v % self.hn)
    }

    /// The H-fiber `{g} x V(H)` as an induced subgraph, in `h` order.
    pub fn h_fiber(&self, g: usize) -> Graph {
        let vs: Vec<usize> = (0..self.hn).map(|h| self.encode(g, h)).collect();
        self.graph.induced_subgraph(&vs)
    }

    /// The G-fiber `V(G) x {h}` as an induced subgraph, in `g` order.
    pub fn g_fiber(&self, h: usize) -> Graph {
        let vs: Vec<usize> = (0..self.gn).map(|g| self.encode(g, h)).collect();
        self.graph.induced_subgraph(&vs)
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

#[inline]
fn enc(hn: usize, g: usize, h: usize) -> usize {
    g * hn + h
}

fn cartesian_edges(g: &Graph, h: &Graph, out: &mut Vec<(usize, usize)>) {
    let hn = h.order();
    for &(a, b) in g.edges() {
        for x in 0..hn {
            out.push((enc(hn, a, x), enc(hn, b, x)));
        }
    }
    for a in 0..g.order() {
        for &(x, y) in h.edges() {
            out.push((enc(hn, a, x), enc(hn, a, y)));
        }
    }
}

fn direct_edges(g: &Graph, h: &Graph, out: &mut Vec<(usize, usize)>) {
    let hn = h.order();
    for &(a, b) in g.edges() {
        for &(x, y) in h.edges() {
            out.push((enc(hn, a, x), enc(hn, b, y)));
            out.push((enc(hn, a, y), enc(hn, b, x)));
        }
    }
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<ProductGraph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyFactor);
    }
    match kind {
        ProductKind::Rooted(root) => rooted_product(g, h, root),
        ProductKind::Corona => Ok(corona(g, h)),
        _ => standard(kind, g, h),
    }
}

fn standard(kind: ProductKind, g: &Graph, h: &Graph) -> Result<ProductGraph> {
    let hn = h.order();
    let mut edges = Vec::new();
    match kind {
        ProductKind::Cartesian => cartesian_edges(g, h, &mut edges),
        ProductKind::Direct => direct_edges(g, h, &mut edges),
        ProductKind::Strong => {
            cartesian_edges(g, h, &mut edges);
            direct_edges(g, h, &mut edges);
        }
        ProductKind::Lexicographic => {
            for &(a, b) in g.edges() {
                for x in 0..hn {
                    for y in 0..hn {
                        edges.push((enc(hn, a, x), enc(hn, b, y)));
                    }
                }
            }
            for a in 0..g.order() {
                for &(x, y) in h.edges() {
                    edges.push((enc(hn, a, x), enc(hn, a, y)));
                }
            }
        }
        ProductKind::Rooted(_) | ProductKind::Corona => unreachable!("handled by product()"),
    }
    Ok(ProductGraph {
        graph: Graph::from_edges(g.order() * hn, edges)?,
        kind,
        gn: g.order(),
        hn,
    })
}

pub fn cartesian(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    product(ProductKind::Cartesian, g, h)
}

pub fn direct(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    product(ProductKind::Direct, g, h)
}

pub fn strong(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    product(ProductKind::Strong, g, h)
}

pub fn lexicographic(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    product(ProductKind::Lexicographic, g, h)
}

/// Rooted product: a copy of `h` at every vertex of `g`, glued at `root`,
/// with the root copies joined along the edges of `g`.
pub fn rooted_product(g: &Graph, h: &Graph, root: usize) -> Result<ProductGraph> {
    let hn = h.order();
    if root >= hn {
        return Err(Error::VertexOutOfRange { vertex: root, order: hn });
    }
    let mut edges = Vec::with_capacity(g.size() + g.order() * h.size());
    for &(a, b) in g.edges() {
        edges.push((enc(hn, a, root), enc(hn, b, root)));
    }
    for a in 0..g.order() {
        for &(x, y) in h.edges() {
            edges.push((enc(hn, a, x), enc(hn, a, y)));
        }
    }
    Ok(ProductGraph {
        graph: Graph::from_edges(g.order() * hn, edges)?,
        kind: ProductKind::Rooted(root),
        gn: g.order(),
        hn,
    })
}

/// Join: disjoint union of `g` and `h` plus every edge between them. The
/// vertices of `h` follow those of `g`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let bridge = (0..g.order()).flat_map(|a| (0..h.order()).map(move |x| (a, off + x)));
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(x, y)| (x + off, y + off)))
        .chain(bridge);
    Graph::from_edges(g.order() + h.order(), edges).expect("valid join")
}

/// Corona, realised as the rooted product of `g` with `K_1 v h` rooted at the
/// `K_1` vertex.
pub fn corona(g: &Graph, h: &Graph) -> ProductGraph {
    let cone = join(&Graph::empty(1), h);
    let mut p = rooted_product(g, &cone, 0).expect("root 0 exists");
    p.kind = ProductKind::Corona;
    p
}
