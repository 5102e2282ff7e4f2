//! Exact maximum independent set by bitset branch and bound.
//!
//! Branching picks the candidate of maximum degree inside the candidate set
//! (lowest index on ties) and explores "include" before "exclude". Nodes are
//! pruned with a greedy clique-cover bound. Candidates with no neighbour in
//! the candidate set are absorbed immediately; every maximal independent
//! extension contains them, so this loses no optimum.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisOutcome {
    /// Sorted vertex set.
    pub set: Vec<usize>,
    pub nodes: u64,
}

struct Search<'a> {
    adj: &'a [BitSet],
    cur: Vec<usize>,
    nodes: u64,
    best: Vec<usize>,
    /// `Some(target)` switches to enumerating every independent set of that
    /// size instead of maximising.
    target: Option<usize>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Number of cliques in a greedy cover of `p`, stopping early once it
    /// exceeds `limit`.
    fn clique_cover(&self, p: &BitSet, limit: usize) -> usize {
        let mut rest = p.clone();
        let mut k = 0;
        while let Some(v) = rest.first() {
            rest.remove(v);
            let mut cand = rest.clone();
            cand.intersect_with(&self.adj[v]);
            while let Some(w) = cand.first() {
                rest.remove(w);
                cand.remove(w);
                cand.intersect_with(&self.adj[w]);
            }
            k += 1;
            if k > limit {
                break;
            }
        }
        k
    }

    fn run(&mut self, mut p: BitSet) {
        self.nodes += 1;
        let saved = self.cur.len();

        let mut pick: Option<(usize, usize)> = None;
        let mut isolated = Vec::new();
        for v in p.iter() {
            let d = self.adj[v].intersection_len(&p);
            if d == 0 {
                isolated.push(v);
            } else if pick.is_none_or(|(bd, _)| d > bd) {
                pick = Some((d, v));
            }
        }
        for v in isolated {
            p.remove(v);
            self.cur.push(v);
        }

        match pick {
            None => self.leaf(),
            Some((_, v)) => {
                let need = match self.target {
                    Some(t) => t,
                    None => self.best.len() + 1,
                };
                let have = self.cur.len();
                if have >= need || have + self.clique_cover(&p, need - have) >= need {
                    let mut inc = p.clone();
                    inc.difference_with(&self.adj[v]);
                    inc.remove(v);
                    self.cur.push(v);
                    self.run(inc);
                    self.cur.pop();

                    p.remove(v);
                    self.run(p);
                }
            }
        }
        self.cur.truncate(saved);
    }

    fn leaf(&mut self) {
        match self.target {
            Some(t) => {
                if self.cur.len() == t {
                    let mut s = self.cur.clone();
                    s.sort_unstable();
                    self.found.push(s);
                }
            }
            None => {
                if self.cur.len() > self.best.len() {
                    self.best.clone_from(&self.cur);
                }
            }
        }
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        Err(Error::Capacity { items: g.order(), cap })
    } else {
        Ok(())
    }
}

fn adjacency(g: &Graph) -> Vec<BitSet> {
    g.vertices().map(|v| g.neighbors(v).clone()).collect()
}

/// A maximum independent set of `g`, refusing graphs with more than `cap`
/// vertices.
pub fn max_independent_set(g: &Graph, cap: usize) -> Result<MisOutcome> {
    check_cap(g, cap)?;
    let adj = adjacency(g);
    let mut s = Search {
        adj: &adj,
        cur: Vec::new(),
        nodes: 0,
        best: Vec::new(),
        target: None,
        found: Vec::new(),
    };
    s.run(BitSet::full(g.order()));
    let mut set = s.best;
    set.sort_unstable();
    Ok(MisOutcome { set, nodes: s.nodes })
}

/// Every maximum independent set of `g`, each sorted, in lexicographic order.
pub fn all_maximum_independent_sets(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    let alpha = max_independent_set(g, cap)?.set.len();
    let adj = adjacency(g);
    let mut s = Search {
        adj: &adj,
        cur: Vec::new(),
        nodes: 0,
        best: Vec::new(),
        target: Some(alpha),
        found: Vec::new(),
    };
    s.run(BitSet::full(g.order()));
    let mut found = s.found;
    found.sort();
    Ok(found)
}
