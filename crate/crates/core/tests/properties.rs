mod common;

use eopack::constructions::{self as cons, BoxKind, LexEopVariant};
use eopack::graph::{canonical_form, generate, parse_graph6, write_graph6, GeneratorSpec};
use eopack::invariants::{self, SolverConfig, WitnessKind};
use eopack::products;
use eopack::trees::{nu_i_tree, recognize_family_f};
use eopack::Graph;
use proptest::prelude::*;

fn graph_on(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A labelled tree from a Pruefer sequence.
fn tree_on(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(move |seq| {
            let mut degree = vec![1; n];
            for &x in &seq {
                degree[x] += 1;
            }
            let mut edges = Vec::new();
            for &x in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, x));
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_structure_and_graph6(g in graph_on(12)) {
        prop_assert!(g.check_invariants());
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.size());
        let text = write_graph6(&g);
        prop_assert_eq!(&parse_graph6(&text).unwrap(), &g);
        prop_assert_eq!(write_graph6(&parse_graph6(&text).unwrap()), text);
    }

    #[test]
    fn product_edge_counts(g in graph_on(6), h in graph_on(6)) {
        let (gn, gm, hn, hm) = (g.order(), g.size(), h.order(), h.size());
        let cart = products::cartesian(&g, &h).unwrap().graph;
        let direct = products::direct(&g, &h).unwrap().graph;
        let strong = products::strong(&g, &h).unwrap().graph;
        let lex = products::lexicographic(&g, &h).unwrap().graph;
        for p in [&cart, &direct, &strong, &lex] {
            prop_assert_eq!(p.order(), gn * hn);
        }
        prop_assert_eq!(cart.size(), gm * hn + gn * hm);
        prop_assert_eq!(direct.size(), 2 * gm * hm);
        prop_assert_eq!(strong.size(), gm * hn + gn * hm + 2 * gm * hm);
        prop_assert_eq!(lex.size(), gm * hn * hn + gn * hm);
        let mut union: Vec<(usize, usize)> = cart.edges().iter().chain(direct.edges()).copied().collect();
        union.sort_unstable();
        union.dedup();
        prop_assert_eq!(union.as_slice(), strong.edges());
    }

    #[test]
    fn products_commute_up_to_isomorphism(g in graph_on(3), h in graph_on(3)) {
        for kind in [products::ProductKind::Cartesian, products::ProductKind::Direct, products::ProductKind::Strong] {
            let gh = products::product(kind, &g, &h).unwrap().graph;
            let hg = products::product(kind, &h, &g).unwrap().graph;
            prop_assert_eq!(canonical_form(&gh), canonical_form(&hg));
        }
    }

    #[test]
    fn strong_with_complete_is_lexicographic(g in graph_on(5), n in 3usize..=4) {
        let k = generate(&GeneratorSpec::Complete(n)).unwrap();
        let strong = products::strong(&g, &k).unwrap().graph;
        let lex = products::lexicographic(&g, &k).unwrap().graph;
        prop_assert_eq!(&strong, &lex);
    }

    #[test]
    fn edge_solvers_match_brute_force(g in graph_on(7).prop_filter("at most 12 edges", |g| g.size() <= 12)) {
        let nu = invariants::nu_i(&g).unwrap();
        let eo = invariants::rho_eo(&g).unwrap();
        prop_assert_eq!(nu.value, common::brute_nu_i(&g));
        prop_assert_eq!(eo.value, common::brute_rho_eo(&g));
        let al = invariants::alpha(&g).unwrap();
        prop_assert!(nu.value <= eo.value && eo.value <= al.value);
        for r in [&nu, &eo, &al] {
            prop_assert_eq!(r.witness.len(), r.value);
            prop_assert!(invariants::verify_witness(&g, r.witness_kind(), r.witness.items()).unwrap());
        }
        prop_assert_eq!(&invariants::rho_eo(&g).unwrap(), &eo);
    }

    #[test]
    fn vertex_solvers_match_brute_force(g in graph_on(9)) {
        let cfg = SolverConfig::default();
        prop_assert_eq!(cfg.alpha(&g).unwrap().value, common::brute_alpha(&g));
        prop_assert_eq!(cfg.rho_o(&g).unwrap().value, common::brute_rho_o(&g));
        prop_assert_eq!(cfg.gamma(&g).unwrap().value, common::brute_gamma(&g));
        for k in 1..=3 {
            let r = cfg.distance_packing(&g, k).unwrap();
            prop_assert_eq!(r.value, common::brute_packing(&g, k as usize));
            prop_assert!(invariants::verify_witness(&g, r.witness_kind(), r.witness.items()).unwrap());
        }
        prop_assert_eq!(cfg.alpha(&g).unwrap().value + cfg.beta(&g).unwrap().value, g.order());
    }

    #[test]
    fn tree_solver_and_recognition(t in tree_on(12)) {
        let nu = invariants::nu_i(&t).unwrap().value;
        prop_assert_eq!(nu_i_tree(&t).unwrap().value, nu);
        let equal = nu == invariants::rho_eo(&t).unwrap().value;
        prop_assert_eq!(recognize_family_f(&t).unwrap().is_equality_tree(), equal);
    }

    #[test]
    fn constructions_are_valid_and_exact(g in graph_on(4), h in graph_on(4)) {
        let (ag, ah) = (invariants::alpha(&g).unwrap().value, invariants::alpha(&h).unwrap().value);
        let (ng, nh) = (invariants::nu_i(&g).unwrap().value, invariants::nu_i(&h).unwrap().value);
        let (rg, rh) = (invariants::rho_eo(&g).unwrap().value, invariants::rho_eo(&h).unwrap().value);

        let w = cons::lex_im_witness(&g, &h).unwrap();
        prop_assert!(w.verify(WitnessKind::InducedMatching));
        prop_assert_eq!(w.len(), ag * nh);
        let w = cons::lex_eop_witness(&g, &h, LexEopVariant::StarBased).unwrap();
        prop_assert!(w.verify(WitnessKind::Eop));
        prop_assert_eq!(w.len(), rg * ah);
        let w = cons::lex_eop_witness(&g, &h, LexEopVariant::FiberBased).unwrap();
        prop_assert!(w.verify(WitnessKind::Eop));
        prop_assert_eq!(w.len(), ag * rh);
        let w = cons::direct_im_witness(&g, &h).unwrap();
        prop_assert!(w.verify(WitnessKind::InducedMatching));
        prop_assert_eq!(w.len(), 2 * ng * nh);
        let w = cons::direct_eop_witness(&g, &h).unwrap();
        prop_assert!(w.verify(WitnessKind::Eop));
        for kind in [BoxKind::Cartesian, BoxKind::Strong] {
            let w = cons::box_eop_witness(&g, &h, kind).unwrap();
            prop_assert!(w.verify(WitnessKind::Eop));
            prop_assert_eq!(w.len(), (rg * ah).max(ag * rh));
        }
    }
}

#[test]
fn lexicographic_product_does_not_commute() {
    let p2 = generate(&GeneratorSpec::Path(2)).unwrap();
    let p3 = generate(&GeneratorSpec::Path(3)).unwrap();
    let a = products::lexicographic(&p2, &p3).unwrap().graph;
    let b = products::lexicographic(&p3, &p2).unwrap().graph;
    assert_eq!(a.size(), 13);
    assert_ne!(a.degree_sequence(), b.degree_sequence());
    assert_ne!(canonical_form(&a), canonical_form(&b));
}

#[test]
fn hypercube_shape() {
    for n in 1..=10 {
        let q = generate(&GeneratorSpec::Hypercube(n)).unwrap();
        assert_eq!(q.order(), 1 << n);
        assert_eq!(q.size(), n << (n - 1));
        assert_eq!(q.regularity(), Some(n));
        assert!(q.bipartition().is_some());
    }
}

#[test]
fn hypercube_witness_sizes() {
    for k in 1..=3u32 {
        let (q, w) = cons::hypercube_eop_witness(k).unwrap();
        assert_eq!(w.len(), 1 << ((1 << k) - 1));
        assert!(invariants::verify_witness(&q, WitnessKind::Eop, &w.0).unwrap());
    }
}
