//! Tree algorithms: a linear dynamic program for the induced matching
//! number, and recognition and generation of trees built from spiders.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{EdgeWitness, Invariant, InvariantResult, Witness};

/// Maximum induced matching of a tree.
///
/// States per vertex `v` of the tree rooted at 0:
/// `free[v]`: `v` is not an endpoint of a chosen edge;
/// `down[v]`: `v` is matched to one of its children;
/// `up[v]`: `v` is matched to its parent, so no child may be an endpoint.
pub fn nu_i_tree(t: &Graph) -> Result<InvariantResult> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    order.push(0);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for w in t.neighbors(v).iter() {
            if w != parent[v] {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let parent = &parent;
    let children = |v: usize| t.neighbors(v).iter().filter(move |&w| w != parent[v]);

    let mut free = vec![0usize; n];
    let mut up = vec![0usize; n];
    let mut down: Vec<Option<usize>> = vec![None; n];
    let mut down_child = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let base: usize = children(v).map(|c| free[c]).sum();
        up[v] = base;
        free[v] = children(v).map(|c| free[c].max(down[c].unwrap_or(0))).sum();
        for c in children(v) {
            let val = 1 + base - free[c] + up[c];
            if down[v].is_none_or(|d| val > d) {
                down[v] = Some(val);
                down_child[v] = c;
            }
        }
    }

    // walk back down, recording chosen edges
    #[derive(Clone, Copy)]
    enum St {
        Free,
        Down,
        Up,
    }
    let mut chosen = Vec::new();
    let root_down = down[0].is_some_and(|d| d > free[0]);
    let mut stack = vec![(0usize, if root_down { St::Down } else { St::Free })];
    while let Some((v, st)) = stack.pop() {
        for c in children(v) {
            let cs = match st {
                St::Free => {
                    if down[c].is_some_and(|d| d > free[c]) {
                        St::Down
                    } else {
                        St::Free
                    }
                }
                St::Down if c == down_child[v] => {
                    chosen.push((v, c));
                    St::Up
                }
                St::Down | St::Up => St::Free,
            };
            stack.push((c, cs));
        }
    }
    let value = free[0].max(down[0].unwrap_or(0));
    let w = EdgeWitness::from_pairs(t, chosen).expect("chosen pairs are tree edges");
    debug_assert_eq!(w.len(), value);
    Ok(InvariantResult {
        name: Invariant::NuI,
        value,
        witness: Witness::Edges(w),
        nodes: n as u64,
        proven_optimal: true,
    })
}

/// One spider: a center and its legs as `(support, leaf)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spider {
    pub center: usize,
    pub legs: Vec<(usize, usize)>,
}

/// Decomposition of a tree into spiders plus connecting edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderPartition {
    pub spiders: Vec<Spider>,
    pub extra_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyF {
    /// `P_1` or `P_2`.
    Trivial,
    Member(SpiderPartition),
    NotMember,
}

impl FamilyF {
    /// Member of the family or one of the two trivial trees.
    pub fn is_equality_tree(&self) -> bool {
        !matches!(self, FamilyF::NotMember)
    }

    pub fn partition(&self) -> Option<&SpiderPartition> {
        match self {
            FamilyF::Member(p) => Some(p),
            _ => None,
        }
    }
}

impl SpiderPartition {
    pub fn centers(&self) -> Vec<usize> {
        self.spiders.iter().map(|s| s.center).collect()
    }

    /// Sum of the leg counts.
    pub fn total_legs(&self) -> usize {
        self.spiders.iter().map(|s| s.legs.len()).sum()
    }

    /// Every support-leaf edge, as sorted pairs.
    pub fn pendant_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .spiders
            .iter()
            .flat_map(|s| s.legs.iter().map(|&(a, b)| (a.min(b), a.max(b))))
            .collect();
        out.sort_unstable();
        out
    }

    /// Checks every structural condition against `t`: the spiders partition
    /// the vertices and induce spiders with at least two legs, the remaining
    /// edges number one less than the spiders, each has a center as an
    /// endvertex, and each spider keeps two leaves of degree one in `t`.
    pub fn validate(&self, t: &Graph) -> bool {
        let n = t.order();
        let mut owner = vec![usize::MAX; n];
        for (i, s) in self.spiders.iter().enumerate() {
            if s.legs.len() < 2 {
                return false;
            }
            let verts = std::iter::once(s.center).chain(s.legs.iter().flat_map(|&(a, b)| [a, b]));
            for v in verts {
                if v >= n || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = i;
            }
        }
        if owner.contains(&usize::MAX) {
            return false;
        }
        let mut spider_edges = Vec::new();
        for s in &self.spiders {
            for &(a, b) in &s.legs {
                if !t.has_edge(s.center, a) || !t.has_edge(a, b) {
                    return false;
                }
                spider_edges.push((s.center.min(a), s.center.max(a)));
                spider_edges.push((a.min(b), a.max(b)));
            }
            let leaves_of_degree_one = s.legs.iter().filter(|&&(_, b)| t.degree(b) == 1).count();
            if leaves_of_degree_one < 2 {
                return false;
            }
        }
        spider_edges.sort_unstable();
        let mut extra: Vec<(usize, usize)> = t
            .edges()
            .iter()
            .copied()
            .filter(|e| spider_edges.binary_search(e).is_err())
            .collect();
        // any edge inside one spider other than its own edges breaks the shape
        if extra.iter().any(|&(u, v)| owner[u] == owner[v]) {
            return false;
        }
        let mut listed: Vec<(usize, usize)> =
            self.extra_edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        listed.sort_unstable();
        extra.sort_unstable();
        if listed != extra || extra.len() + 1 != self.spiders.len() {
            return false;
        }
        let is_center = |v: usize| self.spiders[owner[v]].center == v;
        extra.iter().all(|&(u, v)| is_center(u) || is_center(v))
    }
}

struct Recognizer<'a> {
    t: &'a Graph,
    candidate: Vec<bool>,
    /// `Some(true)` center, `Some(false)` non-center.
    state: Vec<Option<bool>>,
    order: Vec<usize>,
}

impl Recognizer<'_> {
    /// Non-centers need exactly one non-center neighbour; reject partial
    /// assignments that already make this impossible around `v`.
    fn consistent_at(&self, v: usize) -> bool {
        if self.state[v] != Some(false) {
            return true;
        }
        let mut non = 0;
        let mut open = 0;
        for w in self.t.neighbors(v).iter() {
            match self.state[w] {
                Some(false) => non += 1,
                None => open += 1,
                Some(true) => {}
            }
        }
        non <= 1 && non + open >= 1
    }

    fn consistent(&self, v: usize) -> bool {
        self.consistent_at(v) && self.t.neighbors(v).iter().all(|w| self.consistent_at(w))
    }

    fn search(&mut self, i: usize) -> Option<SpiderPartition> {
        if i == self.order.len() {
            return self.assemble();
        }
        let v = self.order[i];
        let options: &[bool] = if self.candidate[v] { &[true, false] } else { &[false] };
        for &c in options {
            self.state[v] = Some(c);
            if self.consistent(v) {
                if let Some(p) = self.search(i + 1) {
                    return Some(p);
                }
            }
        }
        self.state[v] = None;
        None
    }

    /// Given a complete center set, split the legs among centers so that
    /// every center gets at least two legs ending in a degree-one leaf.
    fn assemble(&self) -> Option<SpiderPartition> {
        let t = self.t;
        let n = t.order();
        let is_center = |v: usize| self.state[v] == Some(true);
        let centers: Vec<usize> = (0..n).filter(|&v| is_center(v)).collect();
        if centers.is_empty() {
            return None;
        }
        let mut slot_of = vec![usize::MAX; n];
        for (i, &c) in centers.iter().enumerate() {
            slot_of[c] = i;
        }
        // legs as (a, b) with a < b
        let legs: Vec<(usize, usize)> = (0..n)
            .filter(|&a| !is_center(a))
            .filter_map(|a| {
                let b = t.neighbors(a).iter().find(|&w| !is_center(w))?;
                (a < b).then_some((a, b))
            })
            .collect();
        // good legs: one end is a degree-one leaf, so the other is the support
        let mut good: Vec<(usize, usize)> = Vec::new();
        let mut other: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in &legs {
            match (t.degree(a) == 1, t.degree(b) == 1) {
                (true, true) => return None,
                (false, true) => good.push((a, b)),
                (true, false) => good.push((b, a)),
                (false, false) => other.push((a, b)),
            }
        }
        let adj_centers = |s: usize| -> Vec<usize> {
            t.neighbors(s).iter().filter(|&w| is_center(w)).map(|w| slot_of[w]).collect()
        };
        let good_opts: Vec<Vec<usize>> = good.iter().map(|&(s, _)| adj_centers(s)).collect();

        // bipartite matching: two slots per center against good legs
        let slots = 2 * centers.len();
        let mut leg_match = vec![usize::MAX; good.len()];
        for slot in 0..slots {
            let mut seen = vec![false; good.len()];
            if !augment(slot, &good_opts, &mut leg_match, &mut seen) {
                return None;
            }
        }
        let mut spiders: Vec<Spider> = centers
            .iter()
            .map(|&c| Spider { center: c, legs: Vec::new() })
            .collect();
        for (j, &(s, l)) in good.iter().enumerate() {
            let c = if leg_match[j] != usize::MAX {
                leg_match[j] / 2
            } else {
                good_opts[j][0]
            };
            spiders[c].legs.push((s, l));
        }
        for &(a, b) in &other {
            let (s, l, c) = match adj_centers(a).first() {
                Some(&c) => (a, b, c),
                None => (b, a, *adj_centers(b).first()?),
            };
            spiders[c].legs.push((s, l));
        }
        for sp in &mut spiders {
            sp.legs.sort_unstable();
        }
        let mut inside: Vec<(usize, usize)> = spiders
            .iter()
            .flat_map(|s| {
                s.legs.iter().flat_map(move |&(a, b)| {
                    [(s.center.min(a), s.center.max(a)), (a.min(b), a.max(b))]
                })
            })
            .collect();
        inside.sort_unstable();
        let extra_edges = t
            .edges()
            .iter()
            .copied()
            .filter(|e| inside.binary_search(e).is_err())
            .collect();
        let p = SpiderPartition { spiders, extra_edges };
        p.validate(t).then_some(p)
    }
}

/// Kuhn augmenting path from `slot` (slot `2c` and `2c + 1` belong to
/// center `c`); `leg_match[j]` is the slot holding good leg `j`.
fn augment(slot: usize, opts: &[Vec<usize>], leg_match: &mut [usize], seen: &mut [bool]) -> bool {
    let c = slot / 2;
    for j in 0..opts.len() {
        if seen[j] || !opts[j].contains(&c) {
            continue;
        }
        seen[j] = true;
        if leg_match[j] == usize::MAX || augment(leg_match[j], opts, leg_match, seen) {
            leg_match[j] = slot;
            return true;
        }
    }
    false
}

/// Decides membership in the spider family by backtracking over center
/// sets. A certificate is returned only after it passes
/// [`SpiderPartition::validate`].
pub fn recognize_family_f(t: &Graph) -> Result<FamilyF> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    if n <= 2 {
        return Ok(FamilyF::Trivial);
    }
    // a center needs two neighbours that each carry a degree-one vertex
    let candidate: Vec<bool> = (0..n)
        .map(|v| {
            t.neighbors(v)
                .iter()
                .filter(|&s| t.neighbors(s).iter().any(|l| l != v && t.degree(l) == 1))
                .count()
                >= 2
        })
        .collect();
    let order: Vec<usize> = {
        let mut seen = vec![false; n];
        let mut out = vec![0];
        seen[0] = true;
        let mut i = 0;
        while i < out.len() {
            for w in t.neighbors(out[i]).iter() {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
            i += 1;
        }
        out
    };
    let mut r = Recognizer {
        t,
        candidate,
        state: vec![None; n],
        order,
    };
    Ok(match r.search(0) {
        Some(p) => FamilyF::Member(p),
        None => FamilyF::NotMember,
    })
}

/// How the spiders of [`generate_family_f`] are connected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Wiring {
    /// Explicit extra edges in the global numbering.
    Explicit(Vec<(usize, usize)>),
    /// Each spider after the first is joined to an earlier one by a random
    /// edge with a center endpoint; attachments that would leave a spider
    /// with fewer than two degree-one leaves are redrawn.
    Random,
}

/// Base vertex of each spider: spider `i` occupies `base[i]..base[i] + 2k_i + 1`
/// with center `base`, supports `base + 1 + 2j` and leaves `base + 2 + 2j`.
pub fn spider_offsets(ks: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(ks.len());
    let mut next = 0;
    for &k in ks {
        out.push(next);
        next += 2 * k + 1;
    }
    out
}

pub fn generate_family_f(ks: &[usize], wiring: &Wiring, seed: u64) -> Result<(Graph, SpiderPartition)> {
    if ks.is_empty() || ks.iter().any(|&k| k < 2) {
        return Err(Error::InvalidSpec("every spider needs at least two legs".into()));
    }
    let base = spider_offsets(ks);
    let n: usize = ks.iter().map(|k| 2 * k + 1).sum();
    let spiders: Vec<Spider> = ks
        .iter()
        .zip(&base)
        .map(|(&k, &b)| Spider {
            center: b,
            legs: (0..k).map(|j| (b + 1 + 2 * j, b + 2 + 2 * j)).collect(),
        })
        .collect();
    let spider_edges: Vec<(usize, usize)> = spiders
        .iter()
        .flat_map(|s| s.legs.iter().flat_map(move |&(a, l)| [(s.center, a), (a, l)]))
        .collect();

    let extra = match wiring {
        Wiring::Explicit(edges) => edges.clone(),
        Wiring::Random => random_wiring(ks, &base, seed),
    };
    let owner = |v: usize| base.iter().rposition(|&b| b <= v).expect("vertex in range");
    for &(u, v) in &extra {
        if u >= n || v >= n {
            return Err(Error::InvalidWiring(format!("edge ({u}, {v}) out of range")));
        }
        if owner(u) == owner(v) {
            return Err(Error::InvalidWiring(format!("edge ({u}, {v}) inside one spider")));
        }
        if !base.contains(&u) && !base.contains(&v) {
            return Err(Error::InvalidWiring(format!("edge ({u}, {v}) has no center endpoint")));
        }
    }
    let g = Graph::from_edges(n, spider_edges.into_iter().chain(extra.iter().copied()))?;
    if !g.is_tree() {
        return Err(Error::InvalidWiring("extra edges do not form a tree".into()));
    }
    for s in &spiders {
        if s.legs.iter().filter(|&&(_, l)| g.degree(l) == 1).count() < 2 {
            return Err(Error::InvalidWiring(format!(
                "spider at {} keeps fewer than two degree-one leaves",
                s.center
            )));
        }
    }
    let p = SpiderPartition {
        spiders,
        extra_edges: extra.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect(),
    };
    debug_assert!(p.validate(&g));
    Ok((g, p))
}

fn random_wiring(ks: &[usize], base: &[usize], seed: u64) -> Vec<(usize, usize)> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    // leaves of each spider that are still of degree one
    let mut free_leaves: Vec<usize> = ks.to_vec();
    let mut used_leaf = vec![Vec::<bool>::new(); ks.len()];
    for (i, &k) in ks.iter().enumerate() {
        used_leaf[i] = vec![false; k];
    }
    let mut extra = Vec::new();
    for i in 1..ks.len() {
        loop {
            let j = rng.gen_range(0..i);
            // which spider contributes the center endpoint
            let (center_side, other_side) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
            let size = 2 * ks[other_side] + 1;
            let offset = rng.gen_range(0..size);
            let other = base[other_side] + offset;
            let leaf_index = (offset >= 2 && offset % 2 == 0).then(|| (offset - 2) / 2);
            if let Some(li) = leaf_index {
                if !used_leaf[other_side][li] && free_leaves[other_side] <= 2 {
                    continue;
                }
                if !used_leaf[other_side][li] {
                    used_leaf[other_side][li] = true;
                    free_leaves[other_side] -= 1;
                }
            }
            extra.push((base[center_side], other));
            break;
        }
    }
    extra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_trees, generate, GeneratorSpec::*};
    use crate::invariants::{nu_i, rho_eo, verify_witness, WitnessKind};

    fn gen(spec: crate::graph::GeneratorSpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn dp_named_values() {
        assert_eq!(nu_i_tree(&gen(Path(7))).unwrap().value, 2);
        assert_eq!(nu_i_tree(&gen(Spider(4))).unwrap().value, 4);
        assert_eq!(nu_i_tree(&gen(Star(5))).unwrap().value, 1);
        assert_eq!(nu_i_tree(&gen(Path(1))).unwrap().value, 0);
        assert_eq!(nu_i_tree(&gen(Path(2))).unwrap().value, 1);
        assert_eq!(nu_i_tree(&gen(Cycle(4))), Err(Error::NotATree));
    }

    #[test]
    fn dp_agrees_with_general_solver() {
        for n in 1..=9 {
            for t in enumerate_trees(n, true).unwrap() {
                let r = nu_i_tree(&t).unwrap();
                assert_eq!(r.value, nu_i(&t).unwrap().value, "{t}");
                assert!(verify_witness(&t, WitnessKind::InducedMatching, r.witness.items()).unwrap());
                assert_eq!(r.witness.len(), r.value);
            }
        }
    }

    #[test]
    fn recognizes_small_examples() {
        assert_eq!(recognize_family_f(&gen(Path(1))).unwrap(), FamilyF::Trivial);
        assert_eq!(recognize_family_f(&gen(Path(2))).unwrap(), FamilyF::Trivial);
        let p5 = recognize_family_f(&gen(Path(5))).unwrap();
        assert_eq!(p5.partition().unwrap().spiders.len(), 1);
        assert_eq!(recognize_family_f(&gen(Path(7))).unwrap(), FamilyF::NotMember);
        assert_eq!(recognize_family_f(&gen(Star(3))).unwrap(), FamilyF::NotMember);
        let s4 = gen(Spider(4));
        let p = recognize_family_f(&s4).unwrap();
        assert_eq!(p.partition().unwrap().centers(), vec![0]);
        assert!(recognize_family_f(&gen(Cycle(5))).is_err());
    }

    #[test]
    fn two_spiders_joined_at_centers() {
        let (g, p) = generate_family_f(&[2, 2], &Wiring::Explicit(vec![(0, 5)]), 0).unwrap();
        assert_eq!(p.extra_edges, vec![(0, 5)]);
        let r = recognize_family_f(&g).unwrap();
        let q = r.partition().unwrap();
        assert_eq!(q.spiders.len(), 2);
        assert_eq!(q.extra_edges.len(), 1);
        assert_eq!(nu_i(&g).unwrap().value, 4);
        assert_eq!(rho_eo(&g).unwrap().value, 4);
    }

    #[test]
    fn generator_validates_wiring() {
        let (g, p) = generate_family_f(&[3], &Wiring::Explicit(vec![]), 0).unwrap();
        assert_eq!(g, gen(Spider(3)));
        assert!(p.extra_edges.is_empty());
        // leaf-to-leaf: no center endpoint
        assert!(matches!(
            generate_family_f(&[2, 2], &Wiring::Explicit(vec![(2, 7)]), 0),
            Err(Error::InvalidWiring(_))
        ));
        // attaching to a leaf of a two-legged spider breaks the leaf condition
        assert!(matches!(
            generate_family_f(&[2, 2], &Wiring::Explicit(vec![(5, 2)]), 0),
            Err(Error::InvalidWiring(_))
        ));
        // a three-legged spider can spare one leaf
        assert!(generate_family_f(&[3, 2], &Wiring::Explicit(vec![(7, 2)]), 0).is_ok());
        // missing edge: forest, not a tree
        assert!(generate_family_f(&[2, 2], &Wiring::Explicit(vec![]), 0).is_err());
        assert!(generate_family_f(&[1], &Wiring::Random, 0).is_err());
    }

    #[test]
    fn random_members_round_trip() {
        for seed in 0..30 {
            let (g, p) = generate_family_f(&[2, 2, 2], &Wiring::Random, seed).unwrap();
            assert!(p.validate(&g));
            let r = recognize_family_f(&g).unwrap();
            assert!(r.partition().unwrap().validate(&g), "seed {seed}");
        }
        let (g, _) = generate_family_f(&[2, 2, 2], &Wiring::Random, 7).unwrap();
        assert!(matches!(recognize_family_f(&g).unwrap(), FamilyF::Member(_)));
    }

    #[test]
    fn validate_rejects_broken_certificates() {
        let (g, p) = generate_family_f(&[2, 3], &Wiring::Explicit(vec![(0, 5)]), 0).unwrap();
        assert!(p.validate(&g));
        let mut q = p.clone();
        q.extra_edges.clear();
        assert!(!q.validate(&g));
        let mut q = p.clone();
        q.spiders[0].legs.pop();
        assert!(!q.validate(&g));
    }

    #[test]
    fn recognition_matches_solver_equality() {
        for n in 1..=9 {
            for t in enumerate_trees(n, true).unwrap() {
                let eq = nu_i(&t).unwrap().value == rho_eo(&t).unwrap().value;
                let r = recognize_family_f(&t).unwrap();
                assert_eq!(r.is_equality_tree(), eq, "{t}");
            }
        }
    }
}
