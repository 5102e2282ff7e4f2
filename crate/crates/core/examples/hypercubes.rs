//! Packings in hypercubes: Hamming codes, the prism lift and the table of
//! rho_2, rho_3 and rho_e^o for Q_1..Q_8.

use eopack::constructions as cons;
use eopack::graph::{generate, GeneratorSpec};
use eopack::harness::hypercube_table;
use eopack::invariants::{nu_i, verify_witness, SolverConfig, WitnessKind};

fn main() -> eopack::Result<()> {
    for k in 1..=3 {
        let n = (1usize << k) - 1;
        let q = generate(&GeneratorSpec::Hypercube(n))?;
        let code = cons::hamming_perfect_code(k)?;
        let ok = verify_witness(&q, WitnessKind::PerfectCode, &code.0)?;
        println!("Q_{n}: perfect code of size {} ({})", code.len(), if ok { "verified" } else { "BAD" });
    }
    for n in 2..=5 {
        println!("nu_I(Q_{n}) = {}", nu_i(&generate(&GeneratorSpec::Hypercube(n))?)?.value);
    }
    for k in 1..=3 {
        let (q, w) = cons::hypercube_eop_witness(k)?;
        let n = 1usize << k;
        let alpha = cons::hypercube_alpha_certificate(n)?.certify(&q);
        println!("Q_{n}: EOP witness of size {}, alpha certified at {alpha:?}", w.len());
    }
    println!("n\trho_2\trho_3\trho_e^o");
    for r in hypercube_table(8, &SolverConfig::default())? {
        let r2 = r.rho_2.map_or("?".into(), |e| e.to_string());
        println!("{}\t{r2}\t{}\t{}", r.n, r.rho_3, r.rho_eo);
    }
    Ok(())
}
