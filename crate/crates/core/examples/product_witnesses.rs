//! Explicit packings on lexicographic, direct, Cartesian and strong products
//! built from factor witnesses, compared with the exact values.

use eopack::constructions::{self as cons, BoxKind, LexEopVariant};
use eopack::graph::{generate, GeneratorSpec};
use eopack::invariants::{alpha, nu_i, rho_eo, WitnessKind};
use eopack::products;

fn main() -> eopack::Result<()> {
    let g = generate(&GeneratorSpec::Path(4))?;
    let h = generate(&GeneratorSpec::Cycle(5))?;

    let w = cons::lex_im_witness(&g, &h)?;
    let exact = nu_i(&products::lexicographic(&g, &h)?.graph)?.value;
    println!("lex induced matching: witness {} valid={} exact {exact}", w.len(), w.verify(WitnessKind::InducedMatching));

    for variant in [LexEopVariant::StarBased, LexEopVariant::FiberBased] {
        let w = cons::lex_eop_witness(&g, &h, variant)?;
        println!("lex EOP {variant:?}: witness {} valid={}", w.len(), w.verify(WitnessKind::Eop));
    }

    let w = cons::direct_im_witness(&g, &h)?;
    println!("direct induced matching: witness {} valid={}", w.len(), w.verify(WitnessKind::InducedMatching));
    let w = cons::direct_eop_witness(&g, &h)?;
    println!("direct EOP: witness {} valid={}", w.len(), w.verify(WitnessKind::Eop));

    for kind in [BoxKind::Cartesian, BoxKind::Strong] {
        let w = cons::box_eop_witness(&g, &h, kind)?;
        println!(
            "{kind:?} EOP: witness {} valid={} exact {}",
            w.len(),
            w.verify(WitnessKind::Eop),
            rho_eo(&w.product.graph)?.value
        );
    }

    // the extremal graphs for the lexicographic EOP bounds
    let k2 = generate(&GeneratorSpec::Path(2))?;
    for l in 2..=3 {
        let up = cons::lex_upper_sharp_witness(l, &k2)?;
        let low = cons::lex_lower_sharp_witness(l, 1, &k2)?;
        println!(
            "l={l}: upper family {} (exact {}), lower family {} (exact {}), alpha(K_2)={}",
            up.len(),
            rho_eo(&up.product.graph)?.value,
            low.len(),
            rho_eo(&low.product.graph)?.value,
            alpha(&k2)?.value
        );
    }
    Ok(())
}
