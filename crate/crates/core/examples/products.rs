//! The product zoo on two small factors, with nu_I and rho_e^o of each.

use eopack::graph::{generate, GeneratorSpec};
use eopack::invariants::{nu_i, rho_eo};
use eopack::products::{self, ProductKind};

fn main() -> eopack::Result<()> {
    let g = generate(&GeneratorSpec::Path(3))?;
    let h = generate(&GeneratorSpec::Cycle(4))?;
    for kind in [
        ProductKind::Cartesian,
        ProductKind::Direct,
        ProductKind::Strong,
        ProductKind::Lexicographic,
        ProductKind::Rooted(0),
        ProductKind::Corona,
    ] {
        let p = products::product(kind, &g, &h)?;
        println!(
            "{kind:?}: n={} m={} nu_I={} rho_e^o={}",
            p.graph.order(),
            p.graph.size(),
            nu_i(&p.graph)?.value,
            rho_eo(&p.graph)?.value
        );
    }
    let j = products::join(&g, &h);
    println!("join: n={} m={}", j.order(), j.size());
    // vertex (g, h) of a product is g * |V(H)| + h
    let p = products::lexicographic(&g, &h)?;
    println!("(2, 1) -> {} -> {:?}", p.encode(2, 1), p.decode(p.encode(2, 1)));
    Ok(())
}
