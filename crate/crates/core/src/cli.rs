//! The `eopack` command line. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code.

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::{self as cons, BoxKind, LexEopVariant};
use crate::error::Error;
use crate::graph::{parse_graph6, parse_graph6_lines, write_graph6, Graph};
use crate::harness::{self, RunOptions, Status};
use crate::invariants::{verify_witness, Invariant, SolverConfig, Witness, WitnessKind};
use crate::products;
use crate::trees::{generate_family_f, Wiring};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// Environment variable holding the default solver cap.
pub const CAP_VAR: &str = "EOPACK_CAP";

#[derive(Debug, Parser)]
#[command(name = "eopack", version, about = "Induced matchings and edge open packings in graphs and graph products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute an invariant exactly.
    Compute {
        #[arg(long, value_enum)]
        invariant: InvariantArg,
        /// Graph in graph6.
        #[arg(long, required_unless_present = "file", conflicts_with = "file")]
        g6: Option<String>,
        /// File with one graph6 string per line.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Also print an optimal set.
        #[arg(long)]
        witness: bool,
    },
    /// Build a product and print it in graph6.
    Product {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// Root vertex of H for the rooted product.
        #[arg(long)]
        root: Option<usize>,
    },
    /// Build a named construction and verify it.
    Witness {
        #[arg(long, value_enum)]
        name: Construction,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        root: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum, default_value = "star-based")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "cartesian")]
        product: BoxArg,
        /// Leg counts of the spiders, comma separated.
        #[arg(long, value_delimiter = ',')]
        ks: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the theorem checks whose id contains the filter.
    Check {
        #[arg(long, default_value = "")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-check budget in seconds.
        #[arg(long, default_value_t = 600)]
        budget: u64,
        /// Write the reports as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Reproduce a table of values.
    Table {
        #[arg(long, value_enum)]
        name: TableName,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InvariantArg {
    NuI,
    RhoEo,
    Alpha,
    Beta,
    RhoO,
    #[value(name = "rho-2")]
    Rho2,
    #[value(name = "rho-3")]
    Rho3,
    Gamma,
}

impl From<InvariantArg> for Invariant {
    fn from(a: InvariantArg) -> Self {
        match a {
            InvariantArg::NuI => Invariant::NuI,
            InvariantArg::RhoEo => Invariant::RhoEo,
            InvariantArg::Alpha => Invariant::Alpha,
            InvariantArg::Beta => Invariant::Beta,
            InvariantArg::RhoO => Invariant::RhoO,
            InvariantArg::Rho2 => Invariant::Packing(2),
            InvariantArg::Rho3 => Invariant::Packing(3),
            InvariantArg::Gamma => Invariant::Gamma,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Cartesian,
    Direct,
    Strong,
    Lex,
    Rooted,
    Corona,
    Join,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Construction {
    HypercubeEop,
    HammingCode,
    LexIm,
    LexEop,
    LexUpperSharp,
    LexLowerSharp,
    DirectIm,
    DirectEop,
    BoxEop,
    BipartiteEop,
    Prism3packing,
    RootedIm,
    FamilyF,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    StarBased,
    FiberBased,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BoxArg {
    Cartesian,
    Strong,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableName {
    Hypercubes,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Solver limits, taking the cap from [`CAP_VAR`] when it is set.
pub fn solver_from_env() -> std::result::Result<SolverConfig, String> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(SolverConfig::with_cap)
            .map_err(|_| format!("{CAP_VAR} must be a positive integer, got `{v}`")),
        Err(_) => Ok(SolverConfig::default()),
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let cfg = match solver_from_env() {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, &cfg, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e @ Error::Capacity { .. })) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CAPACITY
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURES
        }
    }
}

fn graph(text: &str) -> Res<Graph> {
    Ok(parse_graph6(text.trim())?)
}

fn need<T>(v: Option<T>, flag: &str) -> Res<T> {
    v.ok_or_else(|| Failure::Usage(format!("this construction needs --{flag}")))
}

fn need_graph(v: &Option<String>, flag: &str) -> Res<Graph> {
    graph(need(v.as_deref(), flag)?)
}

fn items_line(g: &Graph, w: &Witness) -> String {
    let parts: Vec<String> = match w {
        Witness::Edges(e) => e.edges(g).iter().map(|(u, v)| format!("{u}-{v}")).collect(),
        Witness::Vertices(v) => v.0.iter().map(usize::to_string).collect(),
    };
    parts.join(" ")
}

fn dispatch(cmd: Command, cfg: &SolverConfig, out: &mut dyn Write) -> Res<i32> {
    match cmd {
        Command::Compute { invariant, g6, file, witness } => {
            let graphs = match (g6, file) {
                (Some(s), _) => vec![graph(&s)?],
                (None, Some(path)) => parse_graph6_lines(&std::fs::read_to_string(path)?)?,
                (None, None) => return Err(Failure::Usage("give --g6 or --file".into())),
            };
            for g in &graphs {
                let r = cfg.compute(g, invariant.into())?;
                writeln!(out, "{}", r.value)?;
                if witness {
                    writeln!(out, "{}", items_line(g, &r.witness))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Product { kind, g, h, root } => {
            let (g, h) = (graph(&g)?, graph(&h)?);
            let p = match kind {
                KindArg::Cartesian => products::cartesian(&g, &h)?.graph,
                KindArg::Direct => products::direct(&g, &h)?.graph,
                KindArg::Strong => products::strong(&g, &h)?.graph,
                KindArg::Lex => products::lexicographic(&g, &h)?.graph,
                KindArg::Rooted => products::rooted_product(&g, &h, need(root, "root")?)?.graph,
                KindArg::Corona => products::corona(&g, &h).graph,
                KindArg::Join => products::join(&g, &h),
            };
            writeln!(out, "{}", write_graph6(&p))?;
            Ok(EXIT_OK)
        }
        Command::Witness { name, k, g, h, root, l, t, variant, product, ks, seed } => {
            let (host, items, kind) = build_witness(name, k, &g, &h, root, l, t, variant, product, &ks, seed)?;
            let valid = verify_witness(&host, kind, &items)?;
            let w = match kind {
                WitnessKind::InducedMatching | WitnessKind::Eop => Witness::Edges(crate::invariants::EdgeWitness(items)),
                _ => Witness::Vertices(crate::invariants::VertexWitness(items)),
            };
            writeln!(out, "host {}", write_graph6(&host))?;
            writeln!(out, "size {}", w.len())?;
            writeln!(out, "{}", items_line(&host, &w))?;
            writeln!(out, "{}", if valid { "VALID" } else { "INVALID" })?;
            Ok(if valid { EXIT_OK } else { EXIT_FAILURES })
        }
        Command::Check { suite, max_n, seed, budget, json } => {
            let opts = RunOptions { budget: Duration::from_secs(budget), seed, max_n, solver: *cfg };
            let summary = harness::run_suite(&suite, &opts);
            if summary.reports.is_empty() {
                return Err(Failure::Usage(format!("no check matches `{suite}`")));
            }
            for r in &summary.reports {
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skipped => "skipped",
                };
                writeln!(out, "{status} {} instances={} failures={}", r.id, r.instances_run, r.failures.len())?;
            }
            writeln!(out, "passed={} failed={} skipped={}", summary.passed, summary.failed, summary.skipped)?;
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&summary.reports).expect("reports serialize");
                std::fs::write(path, text + "\n")?;
            }
            Ok(if summary.no_failures() { EXIT_OK } else { EXIT_FAILURES })
        }
        Command::Table { name: TableName::Hypercubes, max_n } => {
            let rows = harness::hypercube_table(max_n, cfg)?;
            writeln!(out, "n\trho_2\trho_3\trho_eo")?;
            for r in rows {
                let r2 = r.rho_2.map_or("?".to_string(), |e| e.to_string());
                writeln!(out, "{}\t{}\t{}\t{}", r.n, r2, r.rho_3, r.rho_eo)?;
            }
            Ok(EXIT_OK)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn build_witness(
    name: Construction,
    k: Option<u32>,
    g: &Option<String>,
    h: &Option<String>,
    root: Option<usize>,
    l: Option<usize>,
    t: Option<usize>,
    variant: VariantArg,
    product: BoxArg,
    ks: &[usize],
    seed: u64,
) -> Res<(Graph, Vec<usize>, WitnessKind)> {
    use Construction::*;
    let on_product = |pw: cons::ProductWitness, kind| (pw.product.graph, pw.witness.0, kind);
    Ok(match name {
        HypercubeEop => {
            let (q, w) = cons::hypercube_eop_witness(need(k, "k")?)?;
            (q, w.0, WitnessKind::Eop)
        }
        HammingCode => {
            let k = need(k, "k")?;
            if k > 3 {
                return Err(Failure::Usage("--k above 3 gives a hypercube too large to print".into()));
            }
            let code = cons::hamming_perfect_code(k)?;
            let q = crate::graph::generate(&crate::graph::GeneratorSpec::Hypercube((1 << k) - 1))?;
            (q, code.0, WitnessKind::PerfectCode)
        }
        LexIm => on_product(cons::lex_im_witness(&need_graph(g, "g")?, &need_graph(h, "h")?)?, WitnessKind::InducedMatching),
        LexEop => {
            let v = match variant {
                VariantArg::StarBased => LexEopVariant::StarBased,
                VariantArg::FiberBased => LexEopVariant::FiberBased,
            };
            on_product(cons::lex_eop_witness(&need_graph(g, "g")?, &need_graph(h, "h")?, v)?, WitnessKind::Eop)
        }
        LexUpperSharp => on_product(cons::lex_upper_sharp_witness(need(l, "l")?, &need_graph(h, "h")?)?, WitnessKind::Eop),
        LexLowerSharp => on_product(
            cons::lex_lower_sharp_witness(need(l, "l")?, need(t, "t")?, &need_graph(h, "h")?)?,
            WitnessKind::Eop,
        ),
        DirectIm => on_product(cons::direct_im_witness(&need_graph(g, "g")?, &need_graph(h, "h")?)?, WitnessKind::InducedMatching),
        DirectEop => on_product(cons::direct_eop_witness(&need_graph(g, "g")?, &need_graph(h, "h")?)?, WitnessKind::Eop),
        BoxEop => {
            let kind = match product {
                BoxArg::Cartesian => BoxKind::Cartesian,
                BoxArg::Strong => BoxKind::Strong,
            };
            on_product(cons::box_eop_witness(&need_graph(g, "g")?, &need_graph(h, "h")?, kind)?, WitnessKind::Eop)
        }
        BipartiteEop => {
            let g = need_graph(g, "g")?;
            let w = cons::bipartite_eop_witness(&g)?;
            (g, w.0, WitnessKind::Eop)
        }
        Prism3packing => {
            let (p, w) = cons::prism_3packing_witness(&need_graph(g, "g")?)?;
            (p.graph, w.0, WitnessKind::KPacking(3))
        }
        RootedIm => on_product(
            cons::rooted_im_witness(&need_graph(g, "g")?, &need_graph(h, "h")?, need(root, "root")?)?,
            WitnessKind::InducedMatching,
        ),
        FamilyF => {
            if ks.is_empty() {
                return Err(Failure::Usage("this construction needs --ks".into()));
            }
            let (t, part) = generate_family_f(ks, &Wiring::Random, seed)?;
            let w = crate::invariants::EdgeWitness::from_pairs(&t, part.pendant_edges()).expect("pendant edges of the tree");
            (t, w.0, WitnessKind::InducedMatching)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("eopack").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_p7() {
        let p7 = write_graph6(&crate::graph::generate(&crate::graph::GeneratorSpec::Path(7)).unwrap());
        let (code, out, _) = call(&["compute", "--invariant", "rho-eo", "--g6", &p7]);
        assert_eq!((code, out.as_str()), (0, "4\n"));
    }

    #[test]
    fn hypercube_witness() {
        let (code, out, _) = call(&["witness", "--name", "hypercube-eop", "--k", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("size 8\n"));
        assert!(out.ends_with("VALID\n"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["compute", "--invariant", "zeta", "--g6", "A_"]).0, EXIT_USAGE);
        assert_eq!(call(&["product", "--kind", "rooted", "--g", "A_", "--h", "A_"]).0, EXIT_USAGE);
        assert_eq!(call(&["compute", "--invariant", "alpha", "--g6", "!!"]).0, EXIT_USAGE);
        assert_eq!(call(&["check", "--suite", "no-such"]).0, EXIT_USAGE);
    }

    #[test]
    fn capacity_exit() {
        let q7 = write_graph6(&crate::graph::generate(&crate::graph::GeneratorSpec::Hypercube(7)).unwrap());
        let (code, _, err) = call(&["compute", "--invariant", "rho-eo", "--g6", &q7]);
        assert_eq!(code, EXIT_CAPACITY);
        assert!(err.contains("capacity"));
    }
}
