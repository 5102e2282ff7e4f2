use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Graph;

/// Named graph families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Edgeless(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,r}` with the center at vertex 0.
    Star(usize),
    /// Center 0 joined to one end of each path `P_{l_i}`; legs are numbered
    /// consecutively outward from the center.
    SubdividedStar(Vec<usize>),
    /// `S(2,...,2)` with `k` legs: center 0, support `1 + 2j`, leaf `2 + 2j`.
    Spider(usize),
    /// Vertices are bitmasks of length `n`; edges join masks at Hamming distance 1.
    Hypercube(usize),
    /// Path `z_1 ... z_{2r+1}` where each `z_i` lies on a private 4-cycle
    /// `z_i a_i x_i y_i`. Gadget `i` occupies vertices `4i..4i+4` in the
    /// order `z, a, x, y`.
    Figure1(usize),
}

fn positive(what: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidSpec(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    use GeneratorSpec::*;
    match spec {
        Path(n) => {
            positive("path order", *n)?;
            Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))
        }
        Cycle(n) => {
            if *n < 3 {
                return Err(Error::InvalidSpec("cycle order must be at least 3".into()));
            }
            Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))
        }
        Complete(n) => {
            positive("complete graph order", *n)?;
            Graph::from_edges(*n, (0..*n).flat_map(|i| (i + 1..*n).map(move |j| (i, j))))
        }
        Edgeless(n) => Ok(Graph::empty(*n)),
        CompleteBipartite(a, b) => {
            positive("part size", *a)?;
            positive("part size", *b)?;
            Graph::from_edges(a + b, (0..*a).flat_map(|i| (0..*b).map(move |j| (i, a + j))))
        }
        Star(r) => {
            positive("star size", *r)?;
            Graph::from_edges(r + 1, (1..=*r).map(|i| (0, i)))
        }
        SubdividedStar(legs) => {
            if legs.is_empty() {
                return Err(Error::InvalidSpec("subdivided star needs at least one leg".into()));
            }
            let mut edges = Vec::new();
            let mut next = 1;
            for &len in legs {
                positive("leg length", len)?;
                edges.push((0, next));
                for k in 1..len {
                    edges.push((next + k - 1, next + k));
                }
                next += len;
            }
            Graph::from_edges(next, edges)
        }
        Spider(k) => {
            positive("spider leg count", *k)?;
            generate(&SubdividedStar(vec![2; *k]))
        }
        Hypercube(n) => {
            positive("hypercube dimension", *n)?;
            if *n > 24 {
                return Err(Error::InvalidSpec("hypercube dimension above 24".into()));
            }
            let order = 1usize << n;
            let edges = (0..order).flat_map(|v| {
                (0..*n)
                    .map(move |b| (v, v ^ (1 << b)))
                    .filter(|&(u, w)| u < w)
            });
            Graph::from_edges(order, edges)
        }
        Figure1(r) => {
            positive("figure1 parameter", *r)?;
            Graph::from_edges(4 * (2 * r + 1), figure1_edges(*r))
        }
    }
}

fn figure1_edges(r: usize) -> Vec<(usize, usize)> {
    let m = 2 * r + 1;
    let mut edges = Vec::new();
    for i in 0..m {
        let (z, a, x, y) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        if i + 1 < m {
            edges.push((z, z + 4));
        }
        edges.extend([(z, a), (z, y), (a, x), (x, y)]);
    }
    edges
}

/// The edges `x_i y_i` of [`GeneratorSpec::Figure1`], whose removal gives the
/// spanning subgraph with the smaller edge open packing number.
pub fn figure1_removed_edges(r: usize) -> Vec<(usize, usize)> {
    (0..2 * r + 1).map(|i| (4 * i + 2, 4 * i + 3)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorSpec::*;

    #[test]
    fn sizes() {
        assert_eq!(generate(&Path(1)).unwrap().size(), 0);
        assert_eq!(generate(&Path(7)).unwrap().size(), 6);
        assert_eq!(generate(&Cycle(5)).unwrap().size(), 5);
        assert_eq!(generate(&Complete(5)).unwrap().size(), 10);
        assert_eq!(generate(&CompleteBipartite(2, 3)).unwrap().size(), 6);
        let s = generate(&Star(4)).unwrap();
        assert_eq!((s.order(), s.size(), s.degree(0)), (5, 4, 4));
    }

    #[test]
    fn spider_three() {
        let s = generate(&Spider(3)).unwrap();
        assert_eq!((s.order(), s.size(), s.degree(0)), (7, 6, 3));
        assert!(s.is_tree());
        for j in 0..3 {
            assert!(s.has_edge(0, 1 + 2 * j));
            assert!(s.has_edge(1 + 2 * j, 2 + 2 * j));
            assert_eq!(s.degree(2 + 2 * j), 1);
        }
    }

    #[test]
    fn subdivided_star_single_leg_is_path() {
        let s = generate(&SubdividedStar(vec![4])).unwrap();
        assert_eq!(s, generate(&Path(5)).unwrap());
        let s = generate(&SubdividedStar(vec![3, 1, 1])).unwrap();
        assert_eq!((s.order(), s.size(), s.degree(0)), (6, 5, 3));
    }

    #[test]
    fn hypercube_shape() {
        for n in 1..=10 {
            let q = generate(&Hypercube(n)).unwrap();
            assert_eq!(q.order(), 1 << n);
            assert_eq!(q.size(), n << (n - 1));
            assert_eq!(q.regularity(), Some(n));
            assert!(q.bipartition().is_some());
        }
    }

    #[test]
    fn invalid_parameters() {
        for spec in [Path(0), Cycle(2), Star(0), Spider(0), Hypercube(0), Figure1(0)] {
            assert!(matches!(generate(&spec), Err(Error::InvalidSpec(_))), "{spec:?}");
        }
        assert!(generate(&SubdividedStar(vec![])).is_err());
        assert!(generate(&SubdividedStar(vec![2, 0])).is_err());
    }

    // Frozen adjacency of the drawn graph for r = 1 and r = 2.
    const FIGURE1_R1: &[(usize, usize)] = &[
        (0, 1), (0, 3), (0, 4), (1, 2), (2, 3),
        (4, 5), (4, 7), (4, 8), (5, 6), (6, 7),
        (8, 9), (8, 11), (9, 10), (10, 11),
    ];
    const FIGURE1_R2: &[(usize, usize)] = &[
        (0, 1), (0, 3), (0, 4), (1, 2), (2, 3),
        (4, 5), (4, 7), (4, 8), (5, 6), (6, 7),
        (8, 9), (8, 11), (8, 12), (9, 10), (10, 11),
        (12, 13), (12, 15), (12, 16), (13, 14), (14, 15),
        (16, 17), (16, 19), (17, 18), (18, 19),
    ];

    #[test]
    fn figure1_matches_fixture() {
        let g1 = generate(&Figure1(1)).unwrap();
        assert_eq!(g1.order(), 12);
        assert_eq!(g1.edges(), FIGURE1_R1);
        let g2 = generate(&Figure1(2)).unwrap();
        assert_eq!(g2.order(), 20);
        assert_eq!(g2.edges(), FIGURE1_R2);
        assert_eq!(figure1_removed_edges(1), vec![(2, 3), (6, 7), (10, 11)]);
    }
}
