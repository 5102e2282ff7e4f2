//! Exact invariants of a few small graphs, with optimal sets.
//!
//! cargo run --example invariants [graph6]

use eopack::graph::{generate, parse_graph6, GeneratorSpec};
use eopack::invariants::{verify_witness, Invariant, SolverConfig};

fn main() -> eopack::Result<()> {
    let graphs = match std::env::args().nth(1) {
        Some(g6) => vec![("input".to_string(), parse_graph6(&g6)?)],
        None => vec![
            ("P_7".to_string(), generate(&GeneratorSpec::Path(7))?),
            ("C_8".to_string(), generate(&GeneratorSpec::Cycle(8))?),
            ("K_{1,4}".to_string(), generate(&GeneratorSpec::Star(4))?),
            ("Q_3".to_string(), generate(&GeneratorSpec::Hypercube(3))?),
        ],
    };
    let cfg = SolverConfig::default();
    let all = [
        Invariant::NuI,
        Invariant::RhoEo,
        Invariant::Alpha,
        Invariant::Beta,
        Invariant::RhoO,
        Invariant::Packing(2),
        Invariant::Packing(3),
        Invariant::Gamma,
    ];
    for (name, g) in &graphs {
        println!("{name}");
        for which in all {
            let r = cfg.compute(g, which)?;
            let ok = verify_witness(g, r.witness_kind(), r.witness.items())?;
            println!("  {:8} {:3}  witness {:?} ({})", which.to_string(), r.value, r.witness.items(), if ok { "ok" } else { "BAD" });
        }
    }
    Ok(())
}
