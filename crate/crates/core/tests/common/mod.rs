//! Brute-force oracles written straight from the definitions, sharing no
//! code with the solvers.
#![allow(dead_code)]

use eopack::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let a = adjacency(g);
    let mut d = vec![vec![usize::MAX; n]; n];
    for s in 0..n {
        d[s][s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if a[u][v] && d[s][v] == usize::MAX {
                    d[s][v] = d[s][u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    d
}

fn touches(a: &[Vec<bool>], e: (usize, usize), f: (usize, usize)) -> bool {
    // some edge other than e and f runs from an end of e to an end of f
    for x in [e.0, e.1] {
        for y in [f.0, f.1] {
            if x != y && a[x][y] {
                let xy = (x.min(y), x.max(y));
                if xy != e && xy != f {
                    return true;
                }
            }
        }
    }
    false
}

pub fn is_induced_matching(g: &Graph, set: &[(usize, usize)]) -> bool {
    let a = adjacency(g);
    set.iter().enumerate().all(|(i, &e)| {
        set[i + 1..].iter().all(|&f| {
            let disjoint = e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1;
            disjoint && !touches(&a, e, f)
        })
    })
}

pub fn is_eop(g: &Graph, set: &[(usize, usize)]) -> bool {
    let a = adjacency(g);
    set.iter()
        .enumerate()
        .all(|(i, &e)| set[i + 1..].iter().all(|&f| !touches(&a, e, f)))
}

/// Largest edge subset passing `ok`.
pub fn best_edge_subset(g: &Graph, ok: fn(&Graph, &[(usize, usize)]) -> bool) -> usize {
    let edges = g.edges();
    assert!(edges.len() <= 16, "edge brute force is exponential");
    let mut best = 0;
    for mask in 0u32..(1 << edges.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let set: Vec<(usize, usize)> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        if ok(g, &set) {
            best = size;
        }
    }
    best
}

pub fn brute_nu_i(g: &Graph) -> usize {
    best_edge_subset(g, is_induced_matching)
}

pub fn brute_rho_eo(g: &Graph) -> usize {
    best_edge_subset(g, is_eop)
}

fn vertex_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(n <= 16, "vertex brute force is exponential");
    (0u32..(1 << n)).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

pub fn brute_alpha(g: &Graph) -> usize {
    let a = adjacency(g);
    vertex_subsets(g.order())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| !a[u][v])))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn brute_rho_o(g: &Graph) -> usize {
    let a = adjacency(g);
    let n = g.order();
    vertex_subsets(n)
        .filter(|s| {
            s.iter().enumerate().all(|(i, &u)| {
                s[i + 1..].iter().all(|&v| (0..n).all(|w| !(a[u][w] && a[v][w])))
            })
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Largest set with pairwise distance greater than `k`.
pub fn brute_packing(g: &Graph, k: usize) -> usize {
    let d = distances(g);
    vertex_subsets(g.order())
        .filter(|s| s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| d[u][v] > k)))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn brute_gamma(g: &Graph) -> usize {
    let a = adjacency(g);
    let n = g.order();
    vertex_subsets(n)
        .filter(|s| (0..n).all(|v| s.contains(&v) || s.iter().any(|&u| a[u][v])))
        .map(|s| s.len())
        .min()
        .unwrap_or(0)
}
