//! Exact graph invariants. Edge problems reduce to maximum independent set
//! on a conflict graph; vertex packings reduce to maximum independent set on
//! a vertex conflict graph; domination is solved as set cover.

mod conflict;
mod domination;
mod mis;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use conflict::{
    build_conflict_graph, distance_conflicts, open_packing_conflicts, ConflictGraph, ConflictKind,
};
pub use mis::{all_maximum_independent_sets, max_independent_set, MisOutcome};
pub use verify::{verify_witness, WitnessKind};

/// Default cap on conflict-graph items (edges of the base graph).
pub const DEFAULT_MAX_ITEMS: usize = 250;
/// Default cap on vertices for vertex problems.
pub const DEFAULT_MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    NuI,
    RhoEo,
    Alpha,
    Beta,
    RhoO,
    /// Vertices pairwise at distance greater than `k`.
    Packing(u32),
    Gamma,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::NuI => f.write_str("nu_i"),
            Invariant::RhoEo => f.write_str("rho_eo"),
            Invariant::Alpha => f.write_str("alpha"),
            Invariant::Beta => f.write_str("beta"),
            Invariant::RhoO => f.write_str("rho_o"),
            Invariant::Packing(k) => write!(f, "rho_{k}"),
            Invariant::Gamma => f.write_str("gamma"),
        }
    }
}

/// Sorted indices into `Graph::edges()`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeWitness(pub Vec<usize>);

/// Sorted vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexWitness(pub Vec<usize>);

impl EdgeWitness {
    pub fn new(mut items: Vec<usize>) -> Self {
        items.sort_unstable();
        items.dedup();
        EdgeWitness(items)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The witness edges as vertex pairs.
    pub fn edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        self.0.iter().map(|&i| g.edges()[i]).collect()
    }

    /// Witness from explicit vertex pairs; `None` if some pair is not an edge.
    pub fn from_pairs(g: &Graph, pairs: impl IntoIterator<Item = (usize, usize)>) -> Option<Self> {
        let items: Option<Vec<usize>> = pairs.into_iter().map(|(u, v)| g.edge_index(u, v)).collect();
        items.map(EdgeWitness::new)
    }
}

impl VertexWitness {
    pub fn new(mut items: Vec<usize>) -> Self {
        items.sort_unstable();
        items.dedup();
        VertexWitness(items)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Edges(EdgeWitness),
    Vertices(VertexWitness),
}

impl Witness {
    pub fn items(&self) -> &[usize] {
        match self {
            Witness::Edges(w) => &w.0,
            Witness::Vertices(w) => &w.0,
        }
    }

    pub fn len(&self) -> usize {
        self.items().len()
    }

    pub fn is_empty(&self) -> bool {
        self.items().is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub name: Invariant,
    pub value: usize,
    pub witness: Witness,
    pub nodes: u64,
    pub proven_optimal: bool,
}

impl InvariantResult {
    /// The kind that `verify_witness` should check the witness against.
    pub fn witness_kind(&self) -> WitnessKind {
        match self.name {
            Invariant::NuI => WitnessKind::InducedMatching,
            Invariant::RhoEo => WitnessKind::Eop,
            Invariant::Alpha => WitnessKind::Independent,
            Invariant::Beta => WitnessKind::VertexCover,
            Invariant::RhoO => WitnessKind::OpenPacking,
            Invariant::Packing(k) => WitnessKind::KPacking(k),
            Invariant::Gamma => WitnessKind::Dominating,
        }
    }
}

/// Capacity limits for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub max_items: usize,
    pub max_vertices: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_items: DEFAULT_MAX_ITEMS,
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl SolverConfig {
    /// The same cap for both kinds of problem.
    pub fn with_cap(cap: usize) -> Self {
        SolverConfig {
            max_items: cap,
            max_vertices: cap,
        }
    }

    /// Computes any invariant by name.
    pub fn compute(&self, g: &Graph, which: Invariant) -> Result<InvariantResult> {
        match which {
            Invariant::NuI => self.nu_i(g),
            Invariant::RhoEo => self.rho_eo(g),
            Invariant::Alpha => self.alpha(g),
            Invariant::Beta => self.beta(g),
            Invariant::RhoO => self.rho_o(g),
            Invariant::Packing(k) => self.distance_packing(g, k),
            Invariant::Gamma => self.gamma(g),
        }
    }

    fn edge_problem(&self, g: &Graph, kind: ConflictKind, name: Invariant) -> Result<InvariantResult> {
        if g.size() > self.max_items {
            return Err(Error::Capacity { items: g.size(), cap: self.max_items });
        }
        let c = build_conflict_graph(g, kind);
        let out = max_independent_set(&c.conflicts, self.max_items)?;
        Ok(InvariantResult {
            name,
            value: out.set.len(),
            witness: Witness::Edges(EdgeWitness(out.set)),
            nodes: out.nodes,
            proven_optimal: true,
        })
    }

    fn vertex_problem(&self, g: &Graph, conflicts: impl FnOnce() -> Graph, name: Invariant) -> Result<InvariantResult> {
        if g.order() > self.max_vertices {
            return Err(Error::Capacity { items: g.order(), cap: self.max_vertices });
        }
        let out = max_independent_set(&conflicts(), self.max_vertices)?;
        Ok(InvariantResult {
            name,
            value: out.set.len(),
            witness: Witness::Vertices(VertexWitness(out.set)),
            nodes: out.nodes,
            proven_optimal: true,
        })
    }

    pub fn nu_i(&self, g: &Graph) -> Result<InvariantResult> {
        self.edge_problem(g, ConflictKind::InducedMatching, Invariant::NuI)
    }

    pub fn rho_eo(&self, g: &Graph) -> Result<InvariantResult> {
        self.edge_problem(g, ConflictKind::Eop, Invariant::RhoEo)
    }

    pub fn alpha(&self, g: &Graph) -> Result<InvariantResult> {
        self.vertex_problem(g, || g.clone(), Invariant::Alpha)
    }

    /// Vertex cover number as the complement of a maximum independent set.
    pub fn beta(&self, g: &Graph) -> Result<InvariantResult> {
        let a = self.alpha(g)?;
        let inside = a.witness.items();
        let cover: Vec<usize> = g.vertices().filter(|v| inside.binary_search(v).is_err()).collect();
        Ok(InvariantResult {
            name: Invariant::Beta,
            value: cover.len(),
            witness: Witness::Vertices(VertexWitness(cover)),
            nodes: a.nodes,
            proven_optimal: true,
        })
    }

    pub fn rho_o(&self, g: &Graph) -> Result<InvariantResult> {
        self.vertex_problem(g, || open_packing_conflicts(g), Invariant::RhoO)
    }

    /// Largest vertex set with pairwise distances greater than `k` (`k >= 1`).
    pub fn distance_packing(&self, g: &Graph, k: u32) -> Result<InvariantResult> {
        if k == 0 {
            return Err(Error::OutOfRange { what: "k", value: 0, range: ">= 1" });
        }
        self.vertex_problem(g, || distance_conflicts(g, k), Invariant::Packing(k))
    }

    pub fn gamma(&self, g: &Graph) -> Result<InvariantResult> {
        if g.order() > self.max_vertices {
            return Err(Error::Capacity { items: g.order(), cap: self.max_vertices });
        }
        let (set, nodes) = domination::min_dominating_set(g);
        Ok(InvariantResult {
            name: Invariant::Gamma,
            value: set.len(),
            witness: Witness::Vertices(VertexWitness(set)),
            nodes,
            proven_optimal: true,
        })
    }

    pub fn has_perfect_code(&self, g: &Graph) -> Result<Option<VertexWitness>> {
        if g.order() > self.max_vertices {
            return Err(Error::Capacity { items: g.order(), cap: self.max_vertices });
        }
        Ok(domination::find_perfect_code(g).map(VertexWitness))
    }

    /// Every maximum independent set of the conflict graph, as edge
    /// witnesses in lexicographic order.
    pub fn enumerate_optimal(&self, c: &ConflictGraph) -> Result<Vec<EdgeWitness>> {
        let sets = all_maximum_independent_sets(&c.conflicts, self.max_items)?;
        Ok(sets.into_iter().map(EdgeWitness).collect())
    }
}

pub fn nu_i(g: &Graph) -> Result<InvariantResult> {
    SolverConfig::default().nu_i(g)
}

pub fn rho_eo(g: &Graph) -> Result<InvariantResult> {
    SolverConfig::default().rho_eo(g)
}

pub fn alpha(g: &Graph) -> Result<InvariantResult> {
    SolverConfig::default().alpha(g)
}

pub fn beta(g: &Graph) -> Result<InvariantResult> {
    SolverConfig::default().beta(g)
}

pub fn rho_o(g: &Graph) -> Result<InvariantResult> {
    SolverConfig::default().rho_o(g)
}

pub fn distance_packing(g: &Graph, k: u32) -> Result<InvariantResult> {
    SolverConfig::default().distance_packing(g, k)
}

pub fn gamma(g: &Graph) -> Result<InvariantResult> {
    SolverConfig::default().gamma(g)
}

pub fn has_perfect_code(g: &Graph) -> Result<Option<VertexWitness>> {
    SolverConfig::default().has_perfect_code(g)
}

pub fn enumerate_optimal(c: &ConflictGraph) -> Result<Vec<EdgeWitness>> {
    SolverConfig::default().enumerate_optimal(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, generate, random_graph, GeneratorSpec::*};

    fn gen(spec: crate::graph::GeneratorSpec) -> Graph {
        generate(&spec).unwrap()
    }

    /// Largest edge subset accepted by the literal verifier.
    fn brute_edges(g: &Graph, kind: WitnessKind) -> usize {
        let m = g.size();
        (0u32..1 << m)
            .filter_map(|mask| {
                let s: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
                verify_witness(g, kind, &s).unwrap().then_some(s.len())
            })
            .max()
            .unwrap_or(0)
    }

    fn brute_vertices(g: &Graph, kind: WitnessKind, maximise: bool) -> usize {
        let n = g.order();
        let sizes = (0u32..1 << n).filter_map(|mask| {
            let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            verify_witness(g, kind, &s).unwrap().then_some(s.len())
        });
        if maximise {
            sizes.max().unwrap()
        } else {
            sizes.min().unwrap()
        }
    }

    fn check(g: &Graph, r: &InvariantResult) {
        assert_eq!(r.witness.len(), r.value);
        assert!(verify_witness(g, r.witness_kind(), r.witness.items()).unwrap());
        assert!(r.proven_optimal);
    }

    #[test]
    fn path_and_spider_values() {
        let p7 = gen(Path(7));
        assert_eq!(nu_i(&p7).unwrap().value, 2);
        assert_eq!(rho_eo(&p7).unwrap().value, 4);
        let p5 = gen(Path(5));
        assert_eq!(rho_eo(&p5).unwrap().value, 2);
        assert_eq!(nu_i(&p5).unwrap().value, 2);
        for k in 2..=5 {
            let s = gen(Spider(k));
            assert_eq!(nu_i(&s).unwrap().value, k);
            assert_eq!(rho_eo(&s).unwrap().value, k);
        }
    }

    #[test]
    fn vertex_values() {
        let p4 = gen(Path(4));
        assert_eq!(alpha(&p4).unwrap().value, 2);
        assert_eq!(beta(&p4).unwrap().value, 2);
        let k5 = gen(Complete(5));
        assert_eq!((alpha(&k5).unwrap().value, beta(&k5).unwrap().value), (1, 4));
        assert_eq!(alpha(&gen(Cycle(4))).unwrap().value, 2);
        assert_eq!(rho_o(&gen(Hypercube(4))).unwrap().value, 4);
        assert_eq!(rho_o(&p4).unwrap().value, 2);
        for n in 3..7 {
            assert_eq!(rho_o(&gen(Complete(n))).unwrap().value, 1);
        }
        let q3 = gen(Hypercube(3));
        assert_eq!(distance_packing(&q3, 2).unwrap().value, 2);
        assert_eq!(distance_packing(&q3, 3).unwrap().value, 1);
        assert_eq!(distance_packing(&gen(Hypercube(5)), 3).unwrap().value, 2);
        let g = gamma(&q3).unwrap();
        assert_eq!(g.value, 2);
        assert_eq!(has_perfect_code(&q3).unwrap(), Some(VertexWitness(vec![0, 7])));
        assert_eq!(gamma(&gen(Cycle(4))).unwrap().value, 2);
        assert_eq!(has_perfect_code(&gen(Cycle(4))).unwrap(), None);
        assert_eq!(gamma(&p4).unwrap().value, 2);
    }

    #[test]
    fn enumerate_optimal_examples() {
        let p5 = gen(Path(5));
        let im = build_conflict_graph(&p5, ConflictKind::InducedMatching);
        // edges 01,12,23,34 -> indices 0..3
        assert_eq!(enumerate_optimal(&im).unwrap(), vec![EdgeWitness(vec![0, 3])]);
        let p3 = gen(Path(3));
        let im = build_conflict_graph(&p3, ConflictKind::InducedMatching);
        assert_eq!(enumerate_optimal(&im).unwrap().len(), 2);
        let eop = build_conflict_graph(&p5, ConflictKind::Eop);
        let all = enumerate_optimal(&eop).unwrap();
        // pendant pair, internal pair and the two mixed adjacent pairs
        assert!(all.contains(&EdgeWitness(vec![0, 3])));
        assert!(all.contains(&EdgeWitness(vec![1, 2])));
        assert!(all.contains(&EdgeWitness(vec![0, 1])));
        assert!(all.contains(&EdgeWitness(vec![2, 3])));
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn edge_invariants_match_brute_force_on_small_graphs() {
        for n in 1..=5 {
            for g in enumerate_graphs(n, true).unwrap().filter(|g| g.size() <= 8) {
                let a = nu_i(&g).unwrap();
                let b = rho_eo(&g).unwrap();
                check(&g, &a);
                check(&g, &b);
                assert_eq!(a.value, brute_edges(&g, WitnessKind::InducedMatching), "{g}");
                assert_eq!(b.value, brute_edges(&g, WitnessKind::Eop), "{g}");
            }
        }
    }

    #[test]
    fn vertex_invariants_match_brute_force_on_random_graphs() {
        for seed in 0..25 {
            let g = random_graph(9, 1 + seed % 4, 6, seed);
            let cfg = SolverConfig::default();
            for (inv, kind, max) in [
                (Invariant::Alpha, WitnessKind::Independent, true),
                (Invariant::Beta, WitnessKind::VertexCover, false),
                (Invariant::RhoO, WitnessKind::OpenPacking, true),
                (Invariant::Packing(2), WitnessKind::KPacking(2), true),
                (Invariant::Packing(3), WitnessKind::KPacking(3), true),
                (Invariant::Gamma, WitnessKind::Dominating, false),
            ] {
                let r = cfg.compute(&g, inv).unwrap();
                check(&g, &r);
                assert_eq!(r.value, brute_vertices(&g, kind, max), "{inv} seed {seed}");
            }
        }
    }

    #[test]
    fn capacity_errors() {
        let q8 = gen(Hypercube(8));
        assert!(matches!(alpha(&q8), Err(Error::Capacity { items: 256, cap: 64 })));
        assert!(matches!(rho_eo(&q8), Err(Error::Capacity { items: 1024, cap: 250 })));
        assert!(SolverConfig::with_cap(300).alpha(&gen(Path(70))).is_ok());
    }
}
