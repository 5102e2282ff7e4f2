//! Literal, solver-free checks of the packing and domination definitions.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// Edge indices.
    InducedMatching,
    /// Edge indices.
    Eop,
    Independent,
    VertexCover,
    OpenPacking,
    /// Vertices pairwise at distance greater than `k`.
    KPacking(u32),
    Dominating,
    PerfectCode,
}

impl WitnessKind {
    pub fn is_edge_kind(self) -> bool {
        matches!(self, WitnessKind::InducedMatching | WitnessKind::Eop)
    }
}

fn in_range(items: &[usize], bound: usize, edges: bool) -> Result<()> {
    match items.iter().find(|&&i| i >= bound) {
        Some(&i) if edges => Err(Error::EdgeOutOfRange { index: i, size: bound }),
        Some(&i) => Err(Error::VertexOutOfRange { vertex: i, order: bound }),
        None => Ok(()),
    }
}

fn distinct(items: &[usize]) -> bool {
    let mut v = items.to_vec();
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

/// `true` iff `items` satisfies the definition of `kind` in `g`. Repeated
/// indices make a witness invalid.
pub fn verify_witness(g: &Graph, kind: WitnessKind, items: &[usize]) -> Result<bool> {
    let edges = kind.is_edge_kind();
    in_range(items, if edges { g.size() } else { g.order() }, edges)?;
    if !distinct(items) {
        return Ok(false);
    }
    Ok(match kind {
        WitnessKind::InducedMatching => induced_matching(g, items),
        WitnessKind::Eop => eop(g, items),
        WitnessKind::Independent => k_packing(g, items, 1),
        WitnessKind::VertexCover => {
            let s = BitSet::from_indices(g.order(), items.iter().copied());
            g.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v))
        }
        WitnessKind::OpenPacking => items.iter().enumerate().all(|(i, &u)| {
            items[i + 1..]
                .iter()
                .all(|&v| !g.neighbors(u).intersects(g.neighbors(v)))
        }),
        WitnessKind::KPacking(k) => k_packing(g, items, k),
        WitnessKind::Dominating => dominating(g, items),
        WitnessKind::PerfectCode => k_packing(g, items, 2) && dominating(g, items),
    })
}

fn induced_matching(g: &Graph, items: &[usize]) -> bool {
    let es: Vec<(usize, usize)> = items.iter().map(|&i| g.edges()[i]).collect();
    let mut seen = BitSet::new(g.order());
    for &(u, v) in &es {
        if seen.contains(u) || seen.contains(v) {
            return false;
        }
        seen.insert(u);
        seen.insert(v);
    }
    // the only edges inside the covered vertex set must be the chosen ones
    let inside = g
        .edges()
        .iter()
        .filter(|&&(u, v)| seen.contains(u) && seen.contains(v))
        .count();
    inside == es.len()
}

fn eop(g: &Graph, items: &[usize]) -> bool {
    let es: Vec<(usize, usize)> = items.iter().map(|&i| g.edges()[i]).collect();
    for (i, &e1) in es.iter().enumerate() {
        for &e2 in &es[i + 1..] {
            let joins = |&(a, b): &(usize, usize)| {
                let hit1 = |x| x == e1.0 || x == e1.1;
                let hit2 = |x| x == e2.0 || x == e2.1;
                (hit1(a) && hit2(b)) || (hit1(b) && hit2(a))
            };
            if g
                .edges()
                .iter()
                .any(|e| *e != e1 && *e != e2 && joins(e))
            {
                return false;
            }
        }
    }
    true
}

fn k_packing(g: &Graph, items: &[usize], k: u32) -> bool {
    items.iter().all(|&u| {
        let d = g.bfs_distances(u);
        items.iter().all(|&v| v == u || d[v].is_none_or(|d| d > k))
    })
}

fn dominating(g: &Graph, items: &[usize]) -> bool {
    let mut covered = BitSet::new(g.order());
    for &v in items {
        covered.union_with(&g.closed_neighborhood(v));
    }
    covered.len() == g.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec::*};

    #[test]
    fn path_examples() {
        let p4 = generate(&Path(4)).unwrap();
        assert!(verify_witness(&p4, WitnessKind::Eop, &[0, 1]).unwrap());
        assert!(!verify_witness(&p4, WitnessKind::InducedMatching, &[0, 1]).unwrap());
        assert!(!verify_witness(&p4, WitnessKind::Eop, &[0, 2]).unwrap());
        assert!(!verify_witness(&p4, WitnessKind::InducedMatching, &[0, 2]).unwrap());
        let p5 = generate(&Path(5)).unwrap();
        assert!(verify_witness(&p5, WitnessKind::InducedMatching, &[0, 3]).unwrap());
    }

    #[test]
    fn triangle_is_not_eop() {
        let k3 = generate(&Complete(3)).unwrap();
        assert!(!verify_witness(&k3, WitnessKind::Eop, &[0, 1]).unwrap());
        assert!(verify_witness(&k3, WitnessKind::Eop, &[2]).unwrap());
    }

    #[test]
    fn hypercube_code() {
        let q3 = generate(&Hypercube(3)).unwrap();
        assert!(verify_witness(&q3, WitnessKind::PerfectCode, &[0b000, 0b111]).unwrap());
        assert!(!verify_witness(&q3, WitnessKind::PerfectCode, &[0b000, 0b011]).unwrap());
        assert!(verify_witness(&q3, WitnessKind::KPacking(2), &[0b000, 0b111]).unwrap());
        assert!(!verify_witness(&q3, WitnessKind::KPacking(3), &[0b000, 0b111]).unwrap());
    }

    #[test]
    fn errors_and_duplicates() {
        let p3 = generate(&Path(3)).unwrap();
        assert_eq!(
            verify_witness(&p3, WitnessKind::Eop, &[2]),
            Err(Error::EdgeOutOfRange { index: 2, size: 2 })
        );
        assert!(verify_witness(&p3, WitnessKind::Dominating, &[3]).is_err());
        assert!(!verify_witness(&p3, WitnessKind::Independent, &[0, 0]).unwrap());
        assert!(verify_witness(&p3, WitnessKind::VertexCover, &[1]).unwrap());
        assert!(verify_witness(&p3, WitnessKind::OpenPacking, &[0, 1]).unwrap());
        assert!(!verify_witness(&p3, WitnessKind::OpenPacking, &[0, 2]).unwrap());
    }
}
