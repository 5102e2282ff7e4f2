//! nu_I of rooted products over every root, against the three possible
//! values, and of coronas.

use eopack::graph::{generate, GeneratorSpec};
use eopack::invariants::{alpha, beta, nu_i};
use eopack::products;

fn main() -> eopack::Result<()> {
    let g = generate(&GeneratorSpec::Cycle(5))?;
    let n = g.order();
    for h in [
        generate(&GeneratorSpec::SubdividedStar(vec![2, 1]))?,
        generate(&GeneratorSpec::Star(3))?,
        generate(&GeneratorSpec::SubdividedStar(vec![2, 2]))?,
    ] {
        let nh = nu_i(&h)?.value;
        let values = [n * nh - beta(&g)?.value, n * nh, n * nh + nu_i(&g)?.value];
        for root in h.vertices() {
            let v = nu_i(&products::rooted_product(&g, &h, root)?.graph)?.value;
            let which = values.iter().position(|&x| x == v);
            println!("H with {} vertices, root {root}: nu_I = {v}, candidates {values:?}, case {which:?}", h.order());
        }
    }
    for h in [generate(&GeneratorSpec::Path(3))?, generate(&GeneratorSpec::Edgeless(2))?] {
        let c = products::corona(&g, &h);
        println!(
            "corona with |E(H)|={}: nu_I = {}, |V(G)| nu_I(H) = {}, alpha(G) = {}",
            h.size(),
            nu_i(&c.graph)?.value,
            n * nu_i(&h)?.value,
            alpha(&g)?.value
        );
    }
    Ok(())
}
