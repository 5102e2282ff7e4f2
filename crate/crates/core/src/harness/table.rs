use serde::Serialize;

use crate::constructions as cons;
use crate::error::{Error, Result};
use crate::graph::{generate, GeneratorSpec};
use crate::invariants::{verify_witness, SolverConfig, WitnessKind};

/// Where a table entry comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Exact solver.
    Solver,
    /// A verified perfect code (so the value is `|V|/(n+1)`).
    PerfectCode,
    /// `rho_3(G [] K_2) = rho_2(G)` for bipartite `G`, applied to the row above.
    Prism,
    /// A verified witness; only a lower bound.
    Witness,
    /// A verified witness matched by an independence-number certificate.
    Certificate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub value: usize,
    pub source: Source,
}

impl Entry {
    pub fn is_exact(&self) -> bool {
        self.source != Source::Witness
    }
}

impl std::fmt::Display for Entry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.value)
        } else {
            write!(f, ">={}", self.value)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypercubeRow {
    pub n: usize,
    pub rho_2: Option<Entry>,
    pub rho_3: Entry,
    pub rho_eo: Entry,
}

fn exact(value: usize, source: Source) -> Entry {
    Entry { value, source }
}

/// `rho_2`, `rho_3` and `rho_e^o` of `Q_1..=Q_max_n` (`max_n <= 8`), solved
/// exactly where the solver reaches and certified otherwise. `rho_2(Q_8)` is
/// left open.
pub fn hypercube_table(max_n: usize, cfg: &SolverConfig) -> Result<Vec<HypercubeRow>> {
    if !(1..=8).contains(&max_n) {
        return Err(Error::OutOfRange { what: "max_n", value: max_n, range: "1..=8" });
    }
    let mut rows: Vec<HypercubeRow> = Vec::new();
    for n in 1..=max_n {
        let q = generate(&GeneratorSpec::Hypercube(n))?;
        let rho_2 = if n <= 6 {
            Some(exact(cfg.distance_packing(&q, 2)?.value, Source::Solver))
        } else if n == 7 {
            let code = cons::hamming_perfect_code(3)?;
            verify_witness(&q, WitnessKind::PerfectCode, &code.0)?.then(|| exact(code.len(), Source::PerfectCode))
        } else {
            None
        };
        let rho_3 = if n <= 6 {
            exact(cfg.distance_packing(&q, 3)?.value, Source::Solver)
        } else {
            let below = rows[n - 2].rho_2.filter(Entry::is_exact).expect("rho_2 of the row above");
            exact(below.value, Source::Prism)
        };
        let rho_eo = if n <= 4 {
            exact(cfg.rho_eo(&q)?.value, Source::Solver)
        } else if n == 8 {
            let (host, w) = cons::hypercube_eop_witness(3)?;
            let cert = cons::hypercube_alpha_certificate(8)?;
            let valid = verify_witness(&host, WitnessKind::Eop, &w.0)?;
            let source = if valid && cert.certify(&host) == Some(w.len()) {
                Source::Certificate
            } else {
                Source::Witness
            };
            exact(if valid { w.len() } else { 0 }, source)
        } else {
            let base = generate(&GeneratorSpec::Hypercube(n - 1))?;
            let s = cfg.distance_packing(&base, 2)?;
            let (p, packing) = cons::prism_3packing_from(&base, s.witness.items())?;
            let w = cons::eop_from_3packing(&p.graph, &packing.0)?;
            let valid = verify_witness(&p.graph, WitnessKind::Eop, &w.0)?;
            exact(if valid { w.len() } else { 0 }, Source::Witness)
        };
        rows.push(HypercubeRow { n, rho_2, rho_3, rho_eo });
    }
    Ok(rows)
}
