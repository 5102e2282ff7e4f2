//! Exact domination number and perfect-code search.

use crate::bitset::BitSet;
use crate::graph::Graph;

struct Cover<'a> {
    closed: &'a [BitSet],
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl Cover<'_> {
    fn run(&mut self, uncovered: &BitSet, excluded: &BitSet) {
        self.nodes += 1;
        if uncovered.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best.clone_from(&self.chosen);
            }
            return;
        }
        let usable = |w: usize| !excluded.contains(w);
        let max_gain = (0..self.closed.len())
            .filter(|&w| usable(w))
            .map(|w| self.closed[w].intersection_len(uncovered))
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return;
        }
        let lower = self.chosen.len() + uncovered.len().div_ceil(max_gain);
        if lower >= self.best.len() {
            return;
        }
        // uncovered vertex with the fewest usable dominators
        let mut pivot: Option<(usize, usize)> = None;
        for u in uncovered.iter() {
            let c = self.closed[u].iter().filter(|&w| usable(w)).count();
            if c == 0 {
                return;
            }
            if pivot.is_none_or(|(bc, _)| c < bc) {
                pivot = Some((c, u));
            }
        }
        let (_, u) = pivot.expect("uncovered is nonempty");
        let mut cands: Vec<(usize, usize)> = self.closed[u]
            .iter()
            .filter(|&w| usable(w))
            .map(|w| (self.closed[w].intersection_len(uncovered), w))
            .collect();
        // larger gain first, lower index on ties
        cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut excl = excluded.clone();
        for (_, w) in cands {
            let mut rest = uncovered.clone();
            rest.difference_with(&self.closed[w]);
            self.chosen.push(w);
            self.run(&rest, &excl);
            self.chosen.pop();
            excl.insert(w);
        }
    }
}

/// A minimum dominating set (sorted) and the number of search nodes.
pub(crate) fn min_dominating_set(g: &Graph) -> (Vec<usize>, u64) {
    let n = g.order();
    let closed: Vec<BitSet> = g.vertices().map(|v| g.closed_neighborhood(v)).collect();
    let mut c = Cover {
        closed: &closed,
        chosen: Vec::new(),
        best: (0..n).collect(),
        nodes: 0,
    };
    // best starts at V(G) itself; the search only accepts strict improvements
    c.run(&BitSet::full(n), &BitSet::new(n));
    let mut best = c.best;
    best.sort_unstable();
    (best, c.nodes)
}

/// First perfect code found by exact-cover backtracking, or `None`.
pub(crate) fn find_perfect_code(g: &Graph) -> Option<Vec<usize>> {
    let closed: Vec<BitSet> = g.vertices().map(|v| g.closed_neighborhood(v)).collect();
    let mut chosen = Vec::new();
    if exact_cover(&closed, &mut BitSet::new(g.order()), &mut chosen) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

fn exact_cover(closed: &[BitSet], covered: &mut BitSet, chosen: &mut Vec<usize>) -> bool {
    let n = closed.len();
    let Some(u) = (0..n).find(|&v| !covered.contains(v)) else {
        return true;
    };
    for w in closed[u].iter() {
        if closed[w].intersects(covered) {
            continue;
        }
        covered.union_with(&closed[w]);
        chosen.push(w);
        if exact_cover(closed, covered, chosen) {
            return true;
        }
        chosen.pop();
        covered.difference_with(&closed[w]);
    }
    false
}
