//! Explicit packings on products and hypercubes, assembled from solver
//! witnesses of the factors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{generate, Graph, GeneratorSpec};
use crate::invariants::{self, verify_witness, EdgeWitness, VertexWitness, WitnessKind};
use crate::products::{self, ProductGraph, ProductKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LexEopVariant {
    /// Stars of an EOP set of `G` fanned out over an independent set of `H`.
    StarBased,
    /// Copies of an EOP set of `H` in the fibers over an independent set of `G`.
    FiberBased,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoxKind {
    Cartesian,
    Strong,
}

/// A construction's host graph and the edges it picked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductWitness {
    pub product: ProductGraph,
    pub witness: EdgeWitness,
}

impl ProductWitness {
    fn collect(product: ProductGraph, pairs: Vec<(usize, usize)>) -> Self {
        let witness = EdgeWitness::from_pairs(&product.graph, pairs)
            .expect("construction only picks product edges");
        ProductWitness { product, witness }
    }

    pub fn len(&self) -> usize {
        self.witness.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witness.is_empty()
    }

    pub fn verify(&self, kind: WitnessKind) -> bool {
        verify_witness(&self.product.graph, kind, &self.witness.0).unwrap_or(false)
    }
}

/// Splits an EOP set into its stars as `(center, leaves)`. A lone edge is
/// centred at its lower endvertex.
pub fn star_decomposition(g: &Graph, eop: &EdgeWitness) -> Vec<(usize, Vec<usize>)> {
    let pairs = eop.edges(g);
    let mut deg = vec![0usize; g.order()];
    for &(a, b) in &pairs {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut stars: Vec<(usize, Vec<usize>)> = Vec::new();
    for (a, b) in pairs {
        let (c, leaf) = if deg[b] > 1 { (b, a) } else { (a, b) };
        match stars.iter_mut().find(|(s, _)| *s == c) {
            Some((_, leaves)) => leaves.push(leaf),
            None => stars.push((c, vec![leaf])),
        }
    }
    stars.sort_unstable();
    stars
}

fn edge_set(r: invariants::InvariantResult) -> EdgeWitness {
    EdgeWitness(r.witness.items().to_vec())
}

fn vertex_set(r: invariants::InvariantResult) -> Vec<usize> {
    r.witness.items().to_vec()
}

/// `{(g,h)(g,h') : g in I, hh' in A}` for an `alpha(G)`-set `I` and a
/// `nu_I(H)`-set `A`.
pub fn lex_im_witness(g: &Graph, h: &Graph) -> Result<ProductWitness> {
    let p = products::lexicographic(g, h)?;
    let a = edge_set(invariants::nu_i(h)?);
    let ind = vertex_set(invariants::alpha(g)?);
    let pairs = ind
        .iter()
        .flat_map(|&x| a.edges(h).into_iter().map(move |(u, v)| (x, u, v)))
        .map(|(x, u, v)| (p.encode(x, u), p.encode(x, v)))
        .collect();
    Ok(ProductWitness::collect(p, pairs))
}

pub fn lex_eop_witness(g: &Graph, h: &Graph, variant: LexEopVariant) -> Result<ProductWitness> {
    let p = products::lexicographic(g, h)?;
    let pairs = match variant {
        LexEopVariant::StarBased => {
            let b = edge_set(invariants::rho_eo(g)?);
            let ind = vertex_set(invariants::alpha(h)?);
            let mut pairs = Vec::new();
            for (c, leaves) in star_decomposition(g, &b) {
                for &leaf in &leaves {
                    for &y in &ind {
                        pairs.push((p.encode(c, 0), p.encode(leaf, y)));
                    }
                }
            }
            pairs
        }
        LexEopVariant::FiberBased => fiber_copies(&p, g, h)?,
    };
    Ok(ProductWitness::collect(p, pairs))
}

/// Copies of a `rho_eo(H)`-set in the H-fibers over an `alpha(G)`-set.
fn fiber_copies(p: &ProductGraph, g: &Graph, h: &Graph) -> Result<Vec<(usize, usize)>> {
    let b = edge_set(invariants::rho_eo(h)?);
    let ind = vertex_set(invariants::alpha(g)?);
    Ok(ind
        .iter()
        .flat_map(|&x| b.edges(h).into_iter().map(move |(u, v)| (x, u, v)))
        .map(|(x, u, v)| (p.encode(x, u), p.encode(x, v)))
        .collect())
}

/// Star sharpness graph for the lexicographic upper bound: a star with
/// center `0` and `l` leaves, plus a path `u v` with `u` joined to the first
/// leaf. Vertex `3` is `v`.
pub fn lex_upper_sharp_graph(l: usize) -> Result<Graph> {
    if l < 2 {
        return Err(Error::OutOfRange { what: "l", value: l, range: ">= 2" });
    }
    let mut legs = vec![3];
    legs.extend(std::iter::repeat_n(1, l - 1));
    generate(&GeneratorSpec::SubdividedStar(legs))
}

/// A star with `l` leaves and `t <= l - 1` edges subdivided once; center `0`.
pub fn lex_lower_sharp_graph(l: usize, t: usize) -> Result<Graph> {
    if l == 0 || t >= l {
        return Err(Error::OutOfRange { what: "t", value: t, range: "0 <= t <= l - 1" });
    }
    let mut legs = vec![2; t];
    legs.extend(std::iter::repeat_n(1, l - t));
    generate(&GeneratorSpec::SubdividedStar(legs))
}

/// The upper-bound packing on `lex_upper_sharp_graph(l)` times `h`.
pub fn lex_upper_sharp_witness(l: usize, h: &Graph) -> Result<ProductWitness> {
    let g = lex_upper_sharp_graph(l)?;
    let p = products::lexicographic(&g, h)?;
    let ind = vertex_set(invariants::alpha(h)?);
    let j = edge_set(invariants::rho_eo(h)?);
    let mut pairs = Vec::new();
    for vi in g.neighbors(0).iter() {
        for &y in &ind {
            pairs.push((p.encode(0, 0), p.encode(vi, y)));
        }
    }
    for (x, y) in j.edges(h) {
        pairs.push((p.encode(3, x), p.encode(3, y)));
    }
    Ok(ProductWitness::collect(p, pairs))
}

/// The lower-bound packing on `lex_lower_sharp_graph(l, t)` times `h`.
pub fn lex_lower_sharp_witness(l: usize, t: usize, h: &Graph) -> Result<ProductWitness> {
    let g = lex_lower_sharp_graph(l, t)?;
    let p = products::lexicographic(&g, h)?;
    let ind = vertex_set(invariants::alpha(h)?);
    let mut pairs = Vec::new();
    for u in g.neighbors(0).iter() {
        for &y in &ind {
            pairs.push((p.encode(0, 0), p.encode(u, y)));
        }
    }
    Ok(ProductWitness::collect(p, pairs))
}

/// `Q u Q'` built from induced matchings `M` of `G` and `N` of `H`; size
/// `2|M||N|`.
pub fn direct_im_witness(g: &Graph, h: &Graph) -> Result<ProductWitness> {
    let p = products::direct(g, h)?;
    let m = edge_set(invariants::nu_i(g)?).edges(g);
    let n = edge_set(invariants::nu_i(h)?).edges(h);
    let mut pairs = Vec::with_capacity(2 * m.len() * n.len());
    for &(gi, gi2) in &m {
        for &(hj, hj2) in &n {
            pairs.push((p.encode(gi, hj), p.encode(gi2, hj2)));
            pairs.push((p.encode(gi2, hj), p.encode(gi, hj2)));
        }
    }
    Ok(ProductWitness::collect(p, pairs))
}

/// Star edges of an EOP set of `G` from each center, paired with the edges
/// around an open packing of `H`. Also tries the factors the other way round
/// and keeps the larger set (the first on ties).
pub fn direct_eop_witness(g: &Graph, h: &Graph) -> Result<ProductWitness> {
    let p = products::direct(g, h)?;
    let forward = direct_eop_pairs(g, h, |x, y| p.encode(x, y))?;
    let backward = direct_eop_pairs(h, g, |y, x| p.encode(x, y))?;
    let pairs = if backward.len() > forward.len() { backward } else { forward };
    Ok(ProductWitness::collect(p, pairs))
}

fn direct_eop_pairs(
    a: &Graph,
    b: &Graph,
    enc: impl Fn(usize, usize) -> usize,
) -> Result<Vec<(usize, usize)>> {
    let eop = edge_set(invariants::rho_eo(a)?);
    let packing = vertex_set(invariants::rho_o(b)?);
    let mut pairs = Vec::new();
    for (c, leaves) in star_decomposition(a, &eop) {
        for &hi in &packing {
            for &leaf in &leaves {
                for y in b.neighbors(hi).iter() {
                    pairs.push((enc(c, hi), enc(leaf, y)));
                }
            }
        }
    }
    Ok(pairs)
}

/// EOP set of the Cartesian or strong product: an EOP set of one factor
/// repeated over an independent set of the other, whichever is larger (the
/// copies of `G` on ties).
pub fn box_eop_witness(g: &Graph, h: &Graph, kind: BoxKind) -> Result<ProductWitness> {
    let pk = match kind {
        BoxKind::Cartesian => ProductKind::Cartesian,
        BoxKind::Strong => ProductKind::Strong,
    };
    let p = products::product(pk, g, h)?;
    let a = edge_set(invariants::rho_eo(g)?).edges(g);
    let ind_h = vertex_set(invariants::alpha(h)?);
    let g_copies: Vec<(usize, usize)> = ind_h
        .iter()
        .flat_map(|&y| a.iter().map(move |&(u, v)| (u, v, y)))
        .map(|(u, v, y)| (p.encode(u, y), p.encode(v, y)))
        .collect();
    let h_copies = fiber_copies(&p, g, h)?;
    let pairs = if h_copies.len() > g_copies.len() { h_copies } else { g_copies };
    Ok(ProductWitness::collect(p, pairs))
}

/// All edges at the vertices of a 3-packing `packing` of a bipartite graph.
pub fn eop_from_3packing(g: &Graph, packing: &[usize]) -> Result<EdgeWitness> {
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    if let Some(&v) = packing.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let pairs = packing.iter().flat_map(|&u| g.neighbors(u).iter().map(move |w| (u, w)));
    Ok(EdgeWitness::from_pairs(g, pairs).expect("neighbour pairs are edges"))
}

/// [`eop_from_3packing`] applied to a maximum 3-packing.
pub fn bipartite_eop_witness(g: &Graph) -> Result<EdgeWitness> {
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    let p = vertex_set(invariants::distance_packing(g, 3)?);
    eop_from_3packing(g, &p)
}

/// Lifts a 2-packing `s` of a bipartite graph to `G x K_2` (Cartesian),
/// putting each vertex on the layer named by its side.
pub fn prism_3packing_from(g: &Graph, s: &[usize]) -> Result<(ProductGraph, VertexWitness)> {
    let (side_a, _) = g.bipartition().ok_or(Error::NotBipartite)?;
    let k2 = generate(&GeneratorSpec::Path(2))?;
    let p = products::cartesian(g, &k2)?;
    if let Some(&v) = s.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let layer = |u: usize| if side_a.binary_search(&u).is_ok() { 0 } else { 1 };
    let w = VertexWitness::new(s.iter().map(|&u| p.encode(u, layer(u))).collect());
    Ok((p, w))
}

/// [`prism_3packing_from`] applied to a maximum 2-packing.
pub fn prism_3packing_witness(g: &Graph) -> Result<(ProductGraph, VertexWitness)> {
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    let s = vertex_set(invariants::distance_packing(g, 2)?);
    prism_3packing_from(g, &s)
}

/// The Hamming code of length `2^k - 1` as a vertex set of that hypercube.
/// Bit `i` of a word is checked against column `i + 1` of the parity-check
/// matrix.
pub fn hamming_perfect_code(k: u32) -> Result<VertexWitness> {
    if !(1..=4).contains(&k) {
        return Err(Error::OutOfRange { what: "k", value: k as usize, range: "1..=4" });
    }
    let n = (1usize << k) - 1;
    let code = (0..1usize << n)
        .filter(|&w| {
            let mut syndrome = 0;
            for i in 0..n {
                if w >> i & 1 == 1 {
                    syndrome ^= i + 1;
                }
            }
            syndrome == 0
        })
        .collect();
    Ok(VertexWitness(code))
}

/// EOP set of `Q_{2^k}` of size `2^(2^k - 1)`: the Hamming code of
/// `Q_{2^k - 1}`, lifted to a 3-packing of the prism, with all edges at its
/// vertices.
pub fn hypercube_eop_witness(k: u32) -> Result<(Graph, EdgeWitness)> {
    if !(1..=3).contains(&k) {
        return Err(Error::OutOfRange { what: "k", value: k as usize, range: "1..=3" });
    }
    let code = hamming_perfect_code(k)?;
    let base = generate(&GeneratorSpec::Hypercube((1 << k) - 1))?;
    let (prism, packing) = prism_3packing_from(&base, &code.0)?;
    let w = eop_from_3packing(&prism.graph, &packing.0)?;
    Ok((prism.into_graph(), w))
}

/// Lower-bound certificate for `alpha`: an independent set and a matching
/// with `|I| + |M| = n`. No independent set contains both ends of a matching
/// edge, so `alpha <= n - |M|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaCertificate {
    pub independent: VertexWitness,
    pub matching: Vec<(usize, usize)>,
}

impl AlphaCertificate {
    /// The certified value of `alpha(g)`, if the certificate checks out.
    pub fn certify(&self, g: &Graph) -> Option<usize> {
        let ind = &self.independent.0;
        if !verify_witness(g, WitnessKind::Independent, ind).ok()? {
            return None;
        }
        let mut seen = crate::BitSet::new(g.order());
        for &(u, v) in &self.matching {
            if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
                return None;
            }
            if seen.contains(u) || seen.contains(v) {
                return None;
            }
            seen.insert(u);
            seen.insert(v);
        }
        (ind.len() + self.matching.len() == g.order()).then_some(ind.len())
    }
}

/// Even-weight vertices against the matching along the lowest coordinate.
pub fn hypercube_alpha_certificate(n: usize) -> Result<AlphaCertificate> {
    if !(1..=24).contains(&n) {
        return Err(Error::OutOfRange { what: "n", value: n, range: "1..=24" });
    }
    let even = (0..1usize << n).filter(|w| w.count_ones() % 2 == 0).collect();
    let matching = (0..1usize << n).step_by(2).map(|w| (w, w | 1)).collect();
    Ok(AlphaCertificate { independent: VertexWitness(even), matching })
}

/// A maximum induced matching of `H` copied into every fiber, minus the
/// root-incident edge in the fibers outside an `alpha(G)`-set.
pub fn rooted_im_witness(g: &Graph, h: &Graph, root: usize) -> Result<ProductWitness> {
    let p = products::rooted_product(g, h, root)?;
    let a = edge_set(invariants::nu_i(h)?).edges(h);
    let ind = vertex_set(invariants::alpha(g)?);
    let mut pairs = Vec::new();
    for i in g.vertices() {
        let full = ind.binary_search(&i).is_ok();
        for &(x, y) in &a {
            if full || (x != root && y != root) {
                pairs.push((p.encode(i, x), p.encode(i, y)));
            }
        }
    }
    Ok(ProductWitness::collect(p, pairs))
}
