//! Named families, graph6 round trips and isomorphism-class enumeration.

use eopack::graph::{enumerate_graphs, enumerate_trees, generate, parse_graph6, write_graph6, GeneratorSpec};

fn main() -> eopack::Result<()> {
    for spec in [
        GeneratorSpec::Path(5),
        GeneratorSpec::Cycle(6),
        GeneratorSpec::Spider(3),
        GeneratorSpec::SubdividedStar(vec![3, 1, 1]),
        GeneratorSpec::Hypercube(3),
        GeneratorSpec::Figure1(1),
    ] {
        let g = generate(&spec)?;
        let text = write_graph6(&g);
        assert_eq!(parse_graph6(&text)?, g);
        println!("{spec:?}: n={} m={} g6={text}", g.order(), g.size());
    }
    for n in 1..=6 {
        let graphs = enumerate_graphs(n, true)?.count();
        let trees = enumerate_trees(n, true)?.count();
        println!("n={n}: {graphs} graphs, {trees} trees up to isomorphism");
    }
    Ok(())
}
