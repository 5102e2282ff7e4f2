use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use super::corpus::{graph_corpus, pair_corpus, tree_corpus};
use super::{instance, Check, CheckInfo, Ctx, Expect, Instance};
use crate::constructions::{self as cons, BoxKind, LexEopVariant};
use crate::graph::{figure1_removed_edges, generate, random_graph, Graph, GeneratorSpec};
use crate::invariants::{build_conflict_graph, ConflictKind, EdgeWitness, SolverConfig, WitnessKind};
use crate::products;
use crate::trees::{generate_family_f, recognize_family_f, Wiring};

fn gen(spec: GeneratorSpec) -> Graph {
    generate(&spec).expect("valid generator parameters")
}

const fn run(id: &'static str, citation: &'static str, build: fn(&Ctx) -> Vec<Instance>) -> Check {
    Check { info: CheckInfo { id, citation, skip: None }, build }
}

const fn skipped(id: &'static str, citation: &'static str, reason: &'static str) -> Check {
    Check { info: CheckInfo { id, citation, skip: Some(reason) }, build: |_| Vec::new() }
}

pub(crate) fn registry() -> Vec<Check> {
    vec![
        run("paths-formulas", "nu_I(P_n) = floor((n+1)/3); rho_e^o(P_n) = (n+1)/2 if n = 3 (mod 4), else ceil((n-1)/2)", paths_formulas),
        run("spider-equality", "nu_I(S^k) = rho_e^o(S^k) = k for k >= 2", spider_equality),
        run("spider-eop-structure", "each rho_e^o(S^k)-set is the pendant edges, the internal edges, or (k = 2) an internal edge with its adjacent pendant edge", spider_eop_structure),
        run("family-f-value-uniqueness", "T(k_1,...,k_n) in F has nu_I(T) = k_1 + ... + k_n and a unique nu_I(T)-set", family_f_uniqueness),
        run("trees-iff-family-f", "for a tree T, rho_e^o(T) = nu_I(T) if and only if T in F or T in {P_1, P_2}", trees_iff_family_f),
        run("subdivided-star-lemma", "nu_I(S(l_1,...,l_k)) = rho_e^o(S(l_1,...,l_k)) implies P_2, P_5, or a spider with k >= 3 (the converse from the spider values)", subdivided_star_lemma),
        run("lex-nu-equality", "nu_I(G o H) = alpha(G) nu_I(H)", lex_nu_equality),
        run("lex-eop-bounds", "rho_e^o(G) alpha(H) <= rho_e^o(G o H) <= rho_e^o(G) alpha(H) + rho_e^o(H)(alpha(G) - rho_e^o(G))", lex_eop_bounds),
        run("lex-eop-sharpness", "both lexicographic EOP bounds are attained: star with a pendant P_2 (upper) and star with t <= l-1 subdivided edges (lower)", lex_eop_sharpness),
        run("lex-nu-remark", "nu_I(P_2 o P_{3n+1}) = n < ceil((3n+1)/2) = nu_I(P_2) alpha(P_{3n+1})", lex_nu_remark),
        run("lex-triangular", "nu_I(G o K_2) = alpha(G) = rho_e^o(K_2 o G)", lex_triangular),
        skipped("np-hardness", "induced matching and EOP are NP-complete on triangular graphs", "complexity statement; no reduction is built"),
        run("direct-nu-bound", "nu_I(G x H) >= 2 nu_I(G) nu_I(H), with equality for P_{3m} x K_n (n >= 3)", direct_nu_bound),
        run("direct-eop-bound", "rho_e^o(G x H) >= max{rho_e^o(G) delta(H) rho^o(H), rho_e^o(H) delta(G) rho^o(G)}, with rho_e^o(K_m x K_n) = m - 1 for m >= n >= 3 and rho_e^o(C_{4m} x C_{4n}) = 8mn", direct_eop_bound),
        run("direct-eop-counterexample", "rho_e^o(P_3 x P_{12n-5}) = 24n - 10 < 24n - 8 = 2 rho_e^o(P_3) rho_e^o(P_{12n-5})", direct_eop_counterexample),
        run("direct-nu-remark", "nu_I(K_m x K_n) = 2 for m >= n >= 4, below m - 1", direct_nu_remark),
        run("spanning-incomparability", "(rho_e^o(G), rho_e^o(H)) = (4r+2, 3r+2) for the drawn graph and (1, r+1) for K_{2r+3} and a spanning cycle", spanning_incomparability),
        run("lex-min-box", "rho_e^o(G o H) <= min{rho_e^o(G [x] H), rho_e^o(G [] H)}", lex_min_box),
        run("box-eop-bounds", "rho_e^o(G [] H) and rho_e^o(G [x] H) are >= max{rho_e^o(G) alpha(H), alpha(G) rho_e^o(H)}; rho_e^o(K_{1,r} [] K_{1,s}) = rs; rho_e^o(G [x] K_n) = alpha(G)", box_eop_bounds),
        run("lex-strong-kn", "G [x] K_n = G o K_n and rho_e^o(G o K_n) = alpha(G) for n >= 3", lex_strong_kn),
        run("nu-box-analogues", "nu_I(G o H) <= min{nu_I(G [x] H), nu_I(G [] H)}; nu_I(G [] H), nu_I(G [x] H) >= max{nu_I(G) alpha(H), alpha(G) nu_I(H)}", nu_box_analogues),
        run("hypercube-nu", "nu_I(Q_n) = 2^(n-2)", hypercube_nu),
        run("perfect-code-regular", "an r-regular G with a 1-perfect code has gamma(G) = rho_2(G) = |V(G)|/(r+1)", perfect_code_regular),
        run("hamming-codes", "gamma(Q_n) = rho_2(Q_n) = 2^(n-k) for n = 2^k - 1", hamming_codes),
        run("bipartite-eop-lemma", "rho_e^o(G) >= delta(G) rho_3(G) for bipartite G", bipartite_eop_lemma),
        run("cube-eop-lower", "rho_e^o(Q_n) >= n rho_3(Q_n)", cube_eop_lower),
        run("prism-3packing", "rho_3(G [] K_2) <= rho_2(G), with equality for bipartite G", prism_3packing),
        run("table1-hypercubes", "rho_2(Q_n) = 1,1,2,2,4,8,16; rho_3(Q_n) = 1,1,1,2,2,4,8,16; rho_e^o(Q_n) >= 1,2,3,8,10,24,56,128", table1_hypercubes),
        run("roeo-q2k", "rho_e^o(Q_n) = 2^(n-1) for n = 2^k", roeo_q2k),
        run("rho-o-q2k", "rho^o(Q_n) = 2^(n-k) for n = 2^k", rho_o_q2k),
        skipped("q9-bound", "rho_e^o(Q_9) >= 9 x 17 = 153", "needs rho_2(Q_8) >= 17, beyond exact search here"),
        skipped("rho-o-q9", "34 <= rho^o(Q_9) <= 60", "open packing of Q_9 is beyond exact search here"),
        run("rooted-three-values", "nu_I(G o_v H) in {n nu_I(H) - beta(G), n nu_I(H), n nu_I(H) + nu_I(G)}", rooted_three_values),
        run("rooted-families", "nu_I(G o_v H) = n + nu_I(G), n, n + alpha(G) for the three rooted subdivided stars", rooted_families),
        run("corona-formula", "nu_I(G . H) = |V(G)| nu_I(H) if E(H) is nonempty, else alpha(G)", corona_formula),
        run("rooted-eop-equ2", "n rho_e^o(H) - deg_H(v) beta(G) <= rho_e^o(G o_v H) <= n rho_e^o(H) + rho_e^o(G), attained by C_n o_v K_{1,r} and S(3,1,...,1)", rooted_eop_equ2),
    ]
}

fn paths_formulas(_: &Ctx) -> Vec<Instance> {
    (1..=20usize)
        .map(|n| {
            let p = gen(GeneratorSpec::Path(n));
            instance(vec![p.clone()], move |cfg| {
                let eop = if n % 4 == 3 { (n + 1) / 2 } else { (n - 1).div_ceil(2) };
                Expect::new()
                    .eq("nu_i", (n + 1) / 3, cfg.nu_i(&p)?.value)
                    .eq("rho_eo", eop, cfg.rho_eo(&p)?.value)
                    .done()
            })
        })
        .collect()
}

fn spider_equality(_: &Ctx) -> Vec<Instance> {
    (2..=8usize)
        .map(|k| {
            let s = gen(GeneratorSpec::Spider(k));
            instance(vec![s.clone()], move |cfg| {
                Expect::new()
                    .eq("nu_i", k, cfg.nu_i(&s)?.value)
                    .eq("rho_eo", k, cfg.rho_eo(&s)?.value)
                    .done()
            })
        })
        .collect()
}

fn spider_eop_structure(_: &Ctx) -> Vec<Instance> {
    (2..=6usize)
        .map(|k| {
            let s = gen(GeneratorSpec::Spider(k));
            instance(vec![s.clone()], move |cfg| {
                let legs: Vec<(usize, usize)> = (0..k).map(|j| (1 + 2 * j, 2 + 2 * j)).collect();
                let pendant = EdgeWitness::from_pairs(&s, legs.iter().copied()).expect("spider edges");
                let internal = EdgeWitness::from_pairs(&s, legs.iter().map(|&(a, _)| (0, a))).expect("spider edges");
                let mut allowed = vec![pendant, internal];
                if k == 2 {
                    for &(a, l) in &legs {
                        allowed.push(EdgeWitness::from_pairs(&s, [(0, a), (a, l)]).expect("spider edges"));
                    }
                }
                let optima = cfg.enumerate_optimal(&build_conflict_graph(&s, ConflictKind::Eop))?;
                let odd: Vec<String> = optima
                    .iter()
                    .filter(|w| !allowed.contains(w))
                    .map(|w| format!("{:?}", w.edges(&s)))
                    .collect();
                Expect::new()
                    .that(odd.is_empty(), "only the listed optimal sets", format!("also {}", odd.join(", ")))
                    .eq("number of optima", allowed.len(), optima.len())
                    .done()
            })
        })
        .collect()
}

/// Leg counts for a random member with at most 22 edges.
fn random_ks(rng: &mut SplitMix64) -> Vec<usize> {
    loop {
        let count = rng.gen_range(1..=4);
        let ks: Vec<usize> = (0..count).map(|_| rng.gen_range(2..=4)).collect();
        let edges: usize = ks.iter().map(|k| 2 * k).sum::<usize>() + count - 1;
        if edges <= 22 {
            return ks;
        }
    }
}

fn family_f_uniqueness(ctx: &Ctx) -> Vec<Instance> {
    let mut rng = SplitMix64::seed_from_u64(ctx.seed);
    (0..50)
        .map(|_| {
            let ks = random_ks(&mut rng);
            let seed = rng.gen();
            let (t, part) = generate_family_f(&ks, &Wiring::Random, seed).expect("random wiring is valid");
            instance(vec![t.clone()], move |cfg| {
                let optima = cfg.enumerate_optimal(&build_conflict_graph(&t, ConflictKind::InducedMatching))?;
                let pendant = EdgeWitness::from_pairs(&t, part.pendant_edges()).expect("tree edges");
                let sum: usize = ks.iter().sum();
                Expect::new()
                    .eq("nu_i", sum, cfg.nu_i(&t)?.value)
                    .eq("number of maximum induced matchings", 1, optima.len())
                    .that(
                        optima.first() == Some(&pendant),
                        "the pendant edges",
                        format!("{:?}", optima.first().map(|w| w.edges(&t))),
                    )
                    .done()
            })
        })
        .collect()
}

fn trees_iff_family_f(ctx: &Ctx) -> Vec<Instance> {
    tree_corpus(ctx.tree_n)
        .into_iter()
        .map(|t| {
            instance(vec![t.clone()], move |cfg| {
                let fam = recognize_family_f(&t)?;
                let equal = cfg.nu_i(&t)?.value == cfg.rho_eo(&t)?.value;
                let certified = fam.partition().is_none_or(|p| p.validate(&t));
                Expect::new()
                    .that(
                        fam.is_equality_tree() == equal,
                        format!("in family = {equal}"),
                        format!("in family = {}", fam.is_equality_tree()),
                    )
                    .that(certified, "valid spider certificate", "invalid certificate")
                    .done()
            })
        })
        .collect()
}

/// Nondecreasing leg lengths with `1 + sum <= max_order`.
fn leg_multisets(max_order: usize) -> Vec<Vec<usize>> {
    fn grow(min: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for l in min..=left {
            cur.push(l);
            grow(l, left - l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(1, max_order - 1, &mut Vec::new(), &mut out);
    out
}

fn subdivided_star_lemma(_: &Ctx) -> Vec<Instance> {
    leg_multisets(15)
        .into_iter()
        .map(|legs| {
            let t = gen(GeneratorSpec::SubdividedStar(legs.clone()));
            instance(vec![t.clone()], move |cfg| {
                let equal = cfg.nu_i(&t)?.value == cfg.rho_eo(&t)?.value;
                let path = t.max_degree() <= 2;
                let allowed = (path && (t.order() == 2 || t.order() == 5))
                    || (legs.len() >= 3 && legs.iter().all(|&l| l == 2));
                Expect::new()
                    .that(
                        equal == allowed,
                        format!("equality exactly for P_2, P_5 and spiders with k >= 3 (S{legs:?})"),
                        format!("equality = {equal}"),
                    )
                    .done()
            })
        })
        .collect()
}

fn random_pairs(ctx: &Ctx, count: u64) -> Vec<(Graph, Graph)> {
    (0..count)
        .map(|i| {
            let s = ctx.seed.wrapping_mul(1_000_003).wrapping_add(i);
            (random_graph(5, 1, 2, 2 * s), random_graph(4, 1, 2, 2 * s + 1))
        })
        .collect()
}

fn lex_nu_equality(ctx: &Ctx) -> Vec<Instance> {
    let mut pairs = pair_corpus(ctx.pair_n);
    pairs.extend(random_pairs(ctx, 4));
    pairs
        .into_iter()
        .map(|(g, h)| {
            instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::lexicographic(&g, &h)?;
                let expected = cfg.alpha(&g)?.value * cfg.nu_i(&h)?.value;
                let w = cons::lex_im_witness(&g, &h)?;
                Expect::new()
                    .eq("nu_i(G o H)", expected, cfg.nu_i(&p.graph)?.value)
                    .eq("witness size", expected, w.len())
                    .that(w.verify(WitnessKind::InducedMatching), "valid witness", "invalid witness")
                    .done()
            })
        })
        .collect()
}

fn lex_eop_bounds(ctx: &Ctx) -> Vec<Instance> {
    pair_corpus(ctx.pair_n)
        .into_iter()
        .map(|(g, h)| {
            instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::lexicographic(&g, &h)?;
                let (ag, ah) = (cfg.alpha(&g)?.value, cfg.alpha(&h)?.value);
                let (rg, rh) = (cfg.rho_eo(&g)?.value, cfg.rho_eo(&h)?.value);
                let actual = cfg.rho_eo(&p.graph)?.value;
                let star = cons::lex_eop_witness(&g, &h, LexEopVariant::StarBased)?;
                Expect::new()
                    .ge("rho_eo(G o H)", rg * ah, actual)
                    .le("rho_eo(G o H)", rg * ah + rh * (ag - rg), actual)
                    .eq("star witness size", rg * ah, star.len())
                    .that(star.verify(WitnessKind::Eop), "valid witness", "invalid witness")
                    .done()
            })
        })
        .collect()
}

fn lex_eop_sharpness(ctx: &Ctx) -> Vec<Instance> {
    let mut out = Vec::new();
    for h in graph_corpus(ctx.pair_n) {
        for l in 2..=3 {
            let g = cons::lex_upper_sharp_graph(l).expect("l >= 2");
            let hh = h.clone();
            out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::lexicographic(&g, &hh)?;
                let (ag, ah) = (cfg.alpha(&g)?.value, cfg.alpha(&hh)?.value);
                let (rg, rh) = (cfg.rho_eo(&g)?.value, cfg.rho_eo(&hh)?.value);
                let upper = rg * ah + rh * (ag - rg);
                let w = cons::lex_upper_sharp_witness(l, &hh)?;
                Expect::new()
                    .eq("rho_eo(G o H)", upper, cfg.rho_eo(&p.graph)?.value)
                    .eq("witness size", upper, w.len())
                    .that(w.verify(WitnessKind::Eop), "valid witness", "invalid witness")
                    .done()
            }));
            for t in 0..l {
                let g = cons::lex_lower_sharp_graph(l, t).expect("t < l");
                let hh = h.clone();
                out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
                    let p = products::lexicographic(&g, &hh)?;
                    let lower = cfg.rho_eo(&g)?.value * cfg.alpha(&hh)?.value;
                    let w = cons::lex_lower_sharp_witness(l, t, &hh)?;
                    Expect::new()
                        .eq("rho_eo(G o H)", lower, cfg.rho_eo(&p.graph)?.value)
                        .eq("rho_eo(G)", l, cfg.rho_eo(&g)?.value)
                        .eq("witness size", lower, w.len())
                        .that(w.verify(WitnessKind::Eop), "valid witness", "invalid witness")
                        .done()
                }));
            }
        }
    }
    out
}

fn lex_nu_remark(_: &Ctx) -> Vec<Instance> {
    (1..=3usize)
        .map(|n| {
            let p2 = gen(GeneratorSpec::Path(2));
            let h = gen(GeneratorSpec::Path(3 * n + 1));
            instance(vec![p2.clone(), h.clone()], move |cfg| {
                let p = products::lexicographic(&p2, &h)?;
                let other = cfg.nu_i(&p2)?.value * cfg.alpha(&h)?.value;
                Expect::new()
                    .eq("nu_i(P_2 o P_{3n+1})", n, cfg.nu_i(&p.graph)?.value)
                    .eq("nu_i(P_2) alpha(P_{3n+1})", (3 * n + 1).div_ceil(2), other)
                    .done()
            })
        })
        .collect()
}

fn lex_triangular(ctx: &Ctx) -> Vec<Instance> {
    let k2 = gen(GeneratorSpec::Path(2));
    graph_corpus(ctx.graph_n)
        .into_iter()
        .map(|g| {
            let k2 = k2.clone();
            instance(vec![g.clone()], move |cfg| {
                let a = cfg.alpha(&g)?.value;
                let left = products::lexicographic(&g, &k2)?;
                let right = products::lexicographic(&k2, &g)?;
                Expect::new()
                    .eq("nu_i(G o K_2)", a, cfg.nu_i(&left.graph)?.value)
                    .eq("rho_eo(K_2 o G)", a, cfg.rho_eo(&right.graph)?.value)
                    .done()
            })
        })
        .collect()
}

fn direct_nu_bound(ctx: &Ctx) -> Vec<Instance> {
    let mut out: Vec<Instance> = pair_corpus(ctx.pair_n)
        .into_iter()
        .map(|(g, h)| {
            instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::direct(&g, &h)?;
                let bound = 2 * cfg.nu_i(&g)?.value * cfg.nu_i(&h)?.value;
                let w = cons::direct_im_witness(&g, &h)?;
                Expect::new()
                    .ge("nu_i(G x H)", bound, cfg.nu_i(&p.graph)?.value)
                    .eq("witness size", bound, w.len())
                    .that(w.verify(WitnessKind::InducedMatching), "valid witness", "invalid witness")
                    .done()
            })
        })
        .collect();
    for m in 1..=2usize {
        for n in 3..=4usize {
            let g = gen(GeneratorSpec::Path(3 * m));
            let h = gen(GeneratorSpec::Complete(n));
            out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::direct(&g, &h)?;
                Expect::new().eq("nu_i(P_3m x K_n)", 2 * m, cfg.nu_i(&p.graph)?.value).done()
            }));
        }
    }
    out
}

fn direct_eop_lower(cfg: &SolverConfig, g: &Graph, h: &Graph) -> crate::Result<usize> {
    let side = |a: &Graph, b: &Graph| -> crate::Result<usize> {
        Ok(cfg.rho_eo(a)?.value * b.min_degree() * cfg.rho_o(b)?.value)
    };
    Ok(side(g, h)?.max(side(h, g)?))
}

fn direct_eop_bound(ctx: &Ctx) -> Vec<Instance> {
    let mut out: Vec<Instance> = pair_corpus(ctx.pair_n)
        .into_iter()
        .map(|(g, h)| {
            instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::direct(&g, &h)?;
                let bound = direct_eop_lower(cfg, &g, &h)?;
                let w = cons::direct_eop_witness(&g, &h)?;
                Expect::new()
                    .ge("rho_eo(G x H)", bound, cfg.rho_eo(&p.graph)?.value)
                    .ge("witness size", bound, w.len())
                    .that(w.verify(WitnessKind::Eop), "valid witness", "invalid witness")
                    .done()
            })
        })
        .collect();
    for m in 3..=5usize {
        for n in 3..=m {
            let g = gen(GeneratorSpec::Complete(m));
            let h = gen(GeneratorSpec::Complete(n));
            out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::direct(&g, &h)?;
                Expect::new()
                    .eq("rho_eo(K_m x K_n)", m - 1, cfg.rho_eo(&p.graph)?.value)
                    .eq("lower bound", m - 1, direct_eop_lower(cfg, &g, &h)?)
                    .done()
            }));
        }
    }
    for (m, n) in [(1usize, 1usize), (2, 1)] {
        let g = gen(GeneratorSpec::Cycle(4 * m));
        let h = gen(GeneratorSpec::Cycle(4 * n));
        out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
            let p = products::direct(&g, &h)?;
            Expect::new()
                .eq("rho_eo(C_4m x C_4n)", 8 * m * n, cfg.rho_eo(&p.graph)?.value)
                .eq("lower bound", 8 * m * n, direct_eop_lower(cfg, &g, &h)?)
                .done()
        }));
    }
    out
}

fn direct_eop_counterexample(_: &Ctx) -> Vec<Instance> {
    (1..=2usize)
        .map(|n| {
            let p3 = gen(GeneratorSpec::Path(3));
            let h = gen(GeneratorSpec::Path(12 * n - 5));
            instance(vec![p3.clone(), h.clone()], move |cfg| {
                let p = products::direct(&p3, &h)?;
                let doubled = 2 * cfg.rho_eo(&p3)?.value * cfg.rho_eo(&h)?.value;
                Expect::new()
                    .eq("rho_eo(P_3 x P_{12n-5})", 24 * n - 10, cfg.rho_eo(&p.graph)?.value)
                    .eq("2 rho_eo(P_3) rho_eo(P_{12n-5})", 24 * n - 8, doubled)
                    .done()
            })
        })
        .collect()
}

fn direct_nu_remark(_: &Ctx) -> Vec<Instance> {
    [(4usize, 4usize), (5, 4)]
        .into_iter()
        .map(|(m, n)| {
            let g = gen(GeneratorSpec::Complete(m));
            let h = gen(GeneratorSpec::Complete(n));
            instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::direct(&g, &h)?;
                let side = |a: &Graph, b: &Graph| -> crate::Result<usize> {
                    Ok(cfg.nu_i(a)?.value * b.min_degree() * cfg.rho_o(b)?.value)
                };
                Expect::new()
                    .eq("nu_i(K_m x K_n)", 2, cfg.nu_i(&p.graph)?.value)
                    .eq("max{...}", m - 1, side(&g, &h)?.max(side(&h, &g)?))
                    .done()
            })
        })
        .collect()
}

fn spanning_incomparability(_: &Ctx) -> Vec<Instance> {
    let mut out = Vec::new();
    for r in 1..=2usize {
        let g = gen(GeneratorSpec::Figure1(r));
        let h = g.without_edges(&figure1_removed_edges(r));
        out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
            Expect::new()
                .that(h.is_connected() && h.order() == g.order(), "connected spanning subgraph", "not spanning")
                .eq("rho_eo(G)", 4 * r + 2, cfg.rho_eo(&g)?.value)
                .eq("rho_eo(H)", 3 * r + 2, cfg.rho_eo(&h)?.value)
                .done()
        }));
        let k = gen(GeneratorSpec::Complete(2 * r + 3));
        let c = gen(GeneratorSpec::Cycle(2 * r + 3));
        out.push(instance(vec![k.clone(), c.clone()], move |cfg| {
            Expect::new()
                .eq("rho_eo(K_{2r+3})", 1, cfg.rho_eo(&k)?.value)
                .eq("rho_eo(C_{2r+3})", r + 1, cfg.rho_eo(&c)?.value)
                .done()
        }));
    }
    out
}

fn lex_min_box(ctx: &Ctx) -> Vec<Instance> {
    pair_corpus(ctx.pair_n)
        .into_iter()
        .map(|(g, h)| {
            instance(vec![g.clone(), h.clone()], move |cfg| {
                let lex = cfg.rho_eo(&products::lexicographic(&g, &h)?.graph)?.value;
                let strong = cfg.rho_eo(&products::strong(&g, &h)?.graph)?.value;
                let cart = cfg.rho_eo(&products::cartesian(&g, &h)?.graph)?.value;
                Expect::new().le("rho_eo(G o H)", strong.min(cart), lex).done()
            })
        })
        .collect()
}

fn box_eop_bounds(ctx: &Ctx) -> Vec<Instance> {
    let mut out: Vec<Instance> = pair_corpus(ctx.pair_n)
        .into_iter()
        .map(|(g, h)| {
            instance(vec![g.clone(), h.clone()], move |cfg| {
                let (ag, ah) = (cfg.alpha(&g)?.value, cfg.alpha(&h)?.value);
                let (rg, rh) = (cfg.rho_eo(&g)?.value, cfg.rho_eo(&h)?.value);
                let bound = (rg * ah).max(ag * rh);
                let mut e = Expect::new();
                for (kind, name) in [(BoxKind::Cartesian, "cartesian"), (BoxKind::Strong, "strong")] {
                    let w = cons::box_eop_witness(&g, &h, kind)?;
                    e.ge(&format!("rho_eo {name}"), bound, cfg.rho_eo(&w.product.graph)?.value)
                        .eq(&format!("{name} witness size"), bound, w.len())
                        .that(w.verify(WitnessKind::Eop), "valid witness", format!("invalid {name} witness"));
                }
                e.done()
            })
        })
        .collect();
    for r in 2..=4usize {
        for s in r..=4usize {
            let g = gen(GeneratorSpec::Star(r));
            let h = gen(GeneratorSpec::Star(s));
            out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::cartesian(&g, &h)?;
                Expect::new().eq("rho_eo(K_{1,r} [] K_{1,s})", r * s, cfg.rho_eo(&p.graph)?.value).done()
            }));
        }
    }
    let k3 = gen(GeneratorSpec::Complete(3));
    for g in graph_corpus(ctx.pair_n) {
        let k3 = k3.clone();
        out.push(instance(vec![g.clone(), k3.clone()], move |cfg| {
            let p = products::strong(&g, &k3)?;
            Expect::new().eq("rho_eo(G [x] K_3)", cfg.alpha(&g)?.value, cfg.rho_eo(&p.graph)?.value).done()
        }));
    }
    out
}

fn lex_strong_kn(ctx: &Ctx) -> Vec<Instance> {
    let mut out = Vec::new();
    for g in graph_corpus(ctx.pair_n) {
        for n in 3..=4usize {
            let k = gen(GeneratorSpec::Complete(n));
            let g = g.clone();
            out.push(instance(vec![g.clone(), k.clone()], move |cfg| {
                let lex = products::lexicographic(&g, &k)?;
                let strong = products::strong(&g, &k)?;
                Expect::new()
                    .that(lex.graph == strong.graph, "identical labelled graphs", "different graphs")
                    .eq("rho_eo(G o K_n)", cfg.alpha(&g)?.value, cfg.rho_eo(&lex.graph)?.value)
                    .done()
            }));
        }
    }
    out
}

fn nu_box_analogues(ctx: &Ctx) -> Vec<Instance> {
    pair_corpus(ctx.pair_n)
        .into_iter()
        .map(|(g, h)| {
            instance(vec![g.clone(), h.clone()], move |cfg| {
                let lex = cfg.nu_i(&products::lexicographic(&g, &h)?.graph)?.value;
                let strong = cfg.nu_i(&products::strong(&g, &h)?.graph)?.value;
                let cart = cfg.nu_i(&products::cartesian(&g, &h)?.graph)?.value;
                let bound = (cfg.nu_i(&g)?.value * cfg.alpha(&h)?.value)
                    .max(cfg.alpha(&g)?.value * cfg.nu_i(&h)?.value);
                Expect::new()
                    .le("nu_i(G o H)", strong.min(cart), lex)
                    .ge("nu_i(G [] H)", bound, cart)
                    .ge("nu_i(G [x] H)", bound, strong)
                    .done()
            })
        })
        .collect()
}

fn hypercube_nu(_: &Ctx) -> Vec<Instance> {
    (2..=5usize)
        .map(|n| {
            let q = gen(GeneratorSpec::Hypercube(n));
            instance(vec![q.clone()], move |cfg| {
                Expect::new().eq("nu_i(Q_n)", 1 << (n - 2), cfg.nu_i(&q)?.value).done()
            })
        })
        .collect()
}

fn perfect_code_regular(ctx: &Ctx) -> Vec<Instance> {
    let mut gs: Vec<Graph> = graph_corpus(ctx.graph_n)
        .into_iter()
        .filter(|g| g.regularity().is_some())
        .collect();
    gs.extend([
        gen(GeneratorSpec::Hypercube(3)),
        gen(GeneratorSpec::Hypercube(4)),
        gen(GeneratorSpec::Cycle(6)),
        gen(GeneratorSpec::Cycle(9)),
        gen(GeneratorSpec::CompleteBipartite(3, 3)),
        gen(GeneratorSpec::Complete(6)),
    ]);
    gs.into_iter()
        .map(|g| {
            instance(vec![g.clone()], move |cfg| {
                let r = g.regularity().expect("regular");
                let mut e = Expect::new();
                if let Some(code) = cfg.has_perfect_code(&g)? {
                    let q = g.order() / (r + 1);
                    e.that(g.order() % (r + 1) == 0, "(r+1) divides |V|", "it does not")
                        .that(
                            crate::invariants::verify_witness(&g, WitnessKind::PerfectCode, &code.0)?,
                            "valid perfect code",
                            "invalid perfect code",
                        )
                        .eq("gamma", q, cfg.gamma(&g)?.value)
                        .eq("rho_2", q, cfg.distance_packing(&g, 2)?.value);
                }
                e.done()
            })
        })
        .collect()
}

fn hamming_codes(_: &Ctx) -> Vec<Instance> {
    (1..=3u32)
        .map(|k| {
            let n = (1usize << k) - 1;
            let q = gen(GeneratorSpec::Hypercube(n));
            instance(vec![q.clone()], move |cfg| {
                let code = cons::hamming_perfect_code(k)?;
                let size = 1usize << (n - k as usize);
                let mut e = Expect::new();
                e.eq("code size", size, code.len()).that(
                    crate::invariants::verify_witness(&q, WitnessKind::PerfectCode, &code.0)?,
                    "valid perfect code",
                    "invalid perfect code",
                );
                // a perfect code in an n-regular graph pins gamma and rho_2 at
                // |V|/(n+1); check that number, and solve exactly where small
                e.eq("|V|/(n+1)", size, q.order() / (n + 1));
                if q.order() <= 8 {
                    e.eq("gamma", size, cfg.gamma(&q)?.value)
                        .eq("rho_2", size, cfg.distance_packing(&q, 2)?.value);
                }
                e.done()
            })
        })
        .collect()
}

fn bipartite_eop_lemma(ctx: &Ctx) -> Vec<Instance> {
    let mut gs: Vec<Graph> = graph_corpus(ctx.graph_n)
        .into_iter()
        .filter(|g| g.bipartition().is_some())
        .collect();
    gs.extend((1..=4).map(|n| gen(GeneratorSpec::Hypercube(n))));
    gs.extend([6, 8, 10].map(|n| gen(GeneratorSpec::Cycle(n))));
    gs.into_iter()
        .map(|g| {
            instance(vec![g.clone()], move |cfg| {
                let bound = g.min_degree() * cfg.distance_packing(&g, 3)?.value;
                let w = cons::bipartite_eop_witness(&g)?;
                Expect::new()
                    .ge("rho_eo", bound, cfg.rho_eo(&g)?.value)
                    .ge("witness size", bound, w.len())
                    .that(
                        crate::invariants::verify_witness(&g, WitnessKind::Eop, &w.0)?,
                        "valid witness",
                        "invalid witness",
                    )
                    .done()
            })
        })
        .collect()
}

fn cube_eop_lower(_: &Ctx) -> Vec<Instance> {
    (1..=4usize)
        .map(|n| {
            let q = gen(GeneratorSpec::Hypercube(n));
            instance(vec![q.clone()], move |cfg| {
                Expect::new()
                    .ge("rho_eo(Q_n)", n * cfg.distance_packing(&q, 3)?.value, cfg.rho_eo(&q)?.value)
                    .done()
            })
        })
        .collect()
}

fn prism_3packing(ctx: &Ctx) -> Vec<Instance> {
    let k2 = gen(GeneratorSpec::Path(2));
    graph_corpus(ctx.graph_n)
        .into_iter()
        .map(|g| {
            let k2 = k2.clone();
            instance(vec![g.clone()], move |cfg| {
                let prism = products::cartesian(&g, &k2)?;
                let r3 = cfg.distance_packing(&prism.graph, 3)?.value;
                let r2 = cfg.distance_packing(&g, 2)?.value;
                let mut e = Expect::new();
                e.le("rho_3(G [] K_2)", r2, r3);
                if g.bipartition().is_some() {
                    let (p, w) = cons::prism_3packing_witness(&g)?;
                    e.eq("rho_3(G [] K_2)", r2, r3).eq("witness size", r2, w.len()).that(
                        crate::invariants::verify_witness(&p.graph, WitnessKind::KPacking(3), &w.0)?,
                        "valid 3-packing",
                        "invalid 3-packing",
                    );
                }
                e.done()
            })
        })
        .collect()
}

/// `(rho_2, rho_3, rho_e^o lower bound)` for `n = 1..=8`.
pub(crate) const TABLE1: [(usize, usize, usize); 8] = [
    (1, 1, 1),
    (1, 1, 2),
    (2, 1, 3),
    (2, 2, 8),
    (4, 2, 10),
    (8, 4, 24),
    (16, 8, 56),
    (0, 16, 128),
];

fn table1_hypercubes(_: &Ctx) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=6usize {
        let q = gen(GeneratorSpec::Hypercube(n));
        out.push(instance(vec![q.clone()], move |cfg| {
            let (r2, r3, _) = TABLE1[n - 1];
            Expect::new()
                .eq("rho_2", r2, cfg.distance_packing(&q, 2)?.value)
                .eq("rho_3", r3, cfg.distance_packing(&q, 3)?.value)
                .done()
        }));
    }
    for n in 1..=4usize {
        let q = gen(GeneratorSpec::Hypercube(n));
        out.push(instance(vec![q.clone()], move |cfg| {
            Expect::new().eq("rho_eo", TABLE1[n - 1].2, cfg.rho_eo(&q)?.value).done()
        }));
    }
    // n = 5, 6, 7: a 3-packing lifted from a maximum 2-packing of Q_{n-1}
    for n in 5..=7usize {
        let base = gen(GeneratorSpec::Hypercube(n - 1));
        out.push(instance(vec![base.clone()], move |_| {
            let (p, packing) = cons::prism_3packing_witness(&base)?;
            let w = cons::eop_from_3packing(&p.graph, &packing.0)?;
            let (_, r3, eop) = TABLE1[n - 1];
            Expect::new()
                .ge("3-packing size", r3, packing.len())
                .ge("witness size", eop, w.len())
                .that(
                    crate::invariants::verify_witness(&p.graph, WitnessKind::Eop, &w.0)?,
                    "valid witness",
                    "invalid witness",
                )
                .done()
        }));
    }
    // n = 8: the Hamming code of Q_7 supplies the 2-packing
    out.push(instance(vec![gen(GeneratorSpec::Hypercube(7))], |_| {
        let code = cons::hamming_perfect_code(3)?;
        let (q8, w) = cons::hypercube_eop_witness(3)?;
        Expect::new()
            .ge("rho_2(Q_7) witness", TABLE1[6].0, code.len())
            .ge("witness size", TABLE1[7].2, w.len())
            .that(
                crate::invariants::verify_witness(&q8, WitnessKind::Eop, &w.0)?,
                "valid witness",
                "invalid witness",
            )
            .done()
    }));
    out
}

fn roeo_q2k(_: &Ctx) -> Vec<Instance> {
    (1..=3u32)
        .map(|k| {
            let n = 1usize << k;
            let q = gen(GeneratorSpec::Hypercube(n));
            instance(vec![q.clone()], move |cfg| {
                let target = 1usize << (n - 1);
                let (qq, w) = cons::hypercube_eop_witness(k)?;
                let cert = cons::hypercube_alpha_certificate(n)?;
                let mut e = Expect::new();
                e.that(qq == q, "witness host is Q_n", "different host")
                    .eq("witness size", target, w.len())
                    .that(
                        crate::invariants::verify_witness(&q, WitnessKind::Eop, &w.0)?,
                        "valid witness",
                        "invalid witness",
                    )
                    .that(
                        cert.certify(&q) == Some(target),
                        format!("alpha certificate {target}"),
                        format!("{:?}", cert.certify(&q)),
                    );
                if n <= 4 {
                    e.eq("rho_eo(Q_n)", target, cfg.rho_eo(&q)?.value);
                }
                e.done()
            })
        })
        .collect()
}

fn rho_o_q2k(_: &Ctx) -> Vec<Instance> {
    (1..=2u32)
        .map(|k| {
            let n = 1usize << k;
            let q = gen(GeneratorSpec::Hypercube(n));
            instance(vec![q.clone()], move |cfg| {
                Expect::new().eq("rho_o(Q_n)", 1 << (n - k as usize), cfg.rho_o(&q)?.value).done()
            })
        })
        .collect()
}

/// Value predicted by the case split of the rooted-product argument, from
/// the maximum induced matchings of `h`.
fn rooted_case_value(cfg: &SolverConfig, g: &Graph, h: &Graph, root: usize) -> crate::Result<usize> {
    let n = g.order();
    let nu_h = cfg.nu_i(h)?.value;
    let optima = cfg.enumerate_optimal(&build_conflict_graph(h, ConflictKind::InducedMatching))?;
    let covered = |w: &EdgeWitness| -> Vec<usize> { w.edges(h).into_iter().flat_map(|(a, b)| [a, b]).collect() };
    let avoids_closed = optima
        .iter()
        .any(|w| covered(w).iter().all(|&x| x != root && !h.has_edge(x, root)));
    let root_always = optima.iter().all(|w| covered(w).contains(&root));
    Ok(if avoids_closed {
        n * nu_h + cfg.nu_i(g)?.value
    } else if root_always {
        n * nu_h - cfg.beta(g)?.value
    } else {
        n * nu_h
    })
}

fn rooted_three_values(ctx: &Ctx) -> Vec<Instance> {
    let mut out = Vec::new();
    for (g, h) in pair_corpus(ctx.pair_n) {
        for root in h.vertices() {
            let (g, h) = (g.clone(), h.clone());
            out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::rooted_product(&g, &h, root)?;
                let actual = cfg.nu_i(&p.graph)?.value;
                let n = g.order();
                let nu_h = cfg.nu_i(&h)?.value;
                let beta = cfg.beta(&g)?.value;
                let values = [(n * nu_h).saturating_sub(beta), n * nu_h, n * nu_h + cfg.nu_i(&g)?.value];
                let w = cons::rooted_im_witness(&g, &h, root)?;
                Expect::new()
                    .that(values.contains(&actual), format!("root {root}: one of {values:?}"), format!("{actual}"))
                    .eq(&format!("root {root}: case value"), rooted_case_value(cfg, &g, &h, root)?, actual)
                    .ge("witness size", (n * nu_h).saturating_sub(beta), w.len())
                    .that(w.verify(WitnessKind::InducedMatching), "valid witness", "invalid witness")
                    .done()
            }));
        }
    }
    out
}

fn rooted_families(ctx: &Ctx) -> Vec<Instance> {
    let mut out = Vec::new();
    for r in 2..=3usize {
        let mut first = vec![2];
        first.extend(vec![1; r - 1]);
        let mut third = vec![2, 2];
        third.extend(vec![1; r - 2]);
        // (H, root, which value)
        let families = [
            (gen(GeneratorSpec::SubdividedStar(first)), 2, 0),
            (gen(GeneratorSpec::Star(r)), 1, 1),
            (gen(GeneratorSpec::SubdividedStar(third)), 2, 2),
        ];
        for g in graph_corpus(ctx.pair_n) {
            for (h, root, which) in families.clone() {
                let g = g.clone();
                out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
                    let p = products::rooted_product(&g, &h, root)?;
                    let n = g.order();
                    let expected = match which {
                        0 => n + cfg.nu_i(&g)?.value,
                        1 => n,
                        _ => n + cfg.alpha(&g)?.value,
                    };
                    let mut e = Expect::new();
                    e.eq("nu_i(H)", 1 + usize::from(which == 2), cfg.nu_i(&h)?.value)
                        .eq("nu_i(G o_v H)", expected, cfg.nu_i(&p.graph)?.value);
                    if which == 2 {
                        e.eq("2n - beta(G)", expected, 2 * n - cfg.beta(&g)?.value);
                    }
                    e.done()
                }));
            }
        }
    }
    out
}

fn corona_formula(ctx: &Ctx) -> Vec<Instance> {
    pair_corpus(ctx.pair_n)
        .into_iter()
        .map(|(g, h)| {
            instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::corona(&g, &h);
                let expected = if h.size() > 0 {
                    g.order() * cfg.nu_i(&h)?.value
                } else {
                    cfg.alpha(&g)?.value
                };
                Expect::new().eq("nu_i(G . H)", expected, cfg.nu_i(&p.graph)?.value).done()
            })
        })
        .collect()
}

fn rooted_eop_equ2(ctx: &Ctx) -> Vec<Instance> {
    let mut out = Vec::new();
    for (g, h) in pair_corpus(ctx.pair_n) {
        for root in h.vertices() {
            let (g, h) = (g.clone(), h.clone());
            out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
                let p = products::rooted_product(&g, &h, root)?;
                let actual = cfg.rho_eo(&p.graph)?.value;
                let base = g.order() * cfg.rho_eo(&h)?.value;
                let lower = base.saturating_sub(h.degree(root) * cfg.beta(&g)?.value);
                Expect::new()
                    .ge(&format!("root {root}: rho_eo(G o_v H)"), lower, actual)
                    .le(&format!("root {root}: rho_eo(G o_v H)"), base + cfg.rho_eo(&g)?.value, actual)
                    .done()
            }));
        }
    }
    for n in [4usize, 6] {
        for r in 2..=3usize {
            let c = gen(GeneratorSpec::Cycle(n));
            let star = gen(GeneratorSpec::Star(r));
            out.push(instance(vec![c.clone(), star.clone()], move |cfg| {
                let p = products::rooted_product(&c, &star, 0)?;
                let lower = n * cfg.rho_eo(&star)?.value - r * cfg.beta(&c)?.value;
                Expect::new()
                    .eq("rho_eo(C_n o_v K_{1,r})", n / 2 * r, cfg.rho_eo(&p.graph)?.value)
                    .eq("lower bound", n / 2 * r, lower)
                    .done()
            }));
        }
    }
    for r in 2..=3usize {
        let mut legs = vec![3];
        legs.extend(vec![1; r - 1]);
        let h = gen(GeneratorSpec::SubdividedStar(legs));
        for g in graph_corpus(ctx.pair_n) {
            let h = h.clone();
            out.push(instance(vec![g.clone(), h.clone()], move |cfg| {
                // vertex 3 ends the long leg, at distance 3 from the center
                let p = products::rooted_product(&g, &h, 3)?;
                let n = g.order();
                let rg = cfg.rho_eo(&g)?.value;
                Expect::new()
                    .eq("rho_eo(H)", r, cfg.rho_eo(&h)?.value)
                    .eq("rho_eo(G o_v H)", n * r + rg, cfg.rho_eo(&p.graph)?.value)
                    .done()
            }));
        }
    }
    out
}
