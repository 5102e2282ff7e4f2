//! Named, executable checks of the product, tree and hypercube results,
//! each run over a bounded corpus and summarised in a JSON-friendly report.

mod checks;
mod corpus;
mod table;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{write_graph6, Graph};
use crate::invariants::SolverConfig;

pub use corpus::{graph_corpus, pair_corpus, tree_corpus};
pub use table::{hypercube_table, Entry, HypercubeRow, Source};

/// Registry entry: a check id and the statement it exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckInfo {
    pub id: &'static str,
    pub citation: &'static str,
    /// Set for statements that are registered but not run.
    pub skip: Option<&'static str>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs_graph6: Vec<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub citation: String,
    pub instances_run: usize,
    /// Instances not run, because of solver capacity or the time budget.
    pub instances_skipped: usize,
    pub failures: Vec<Failure>,
    pub wall_ms: u64,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    /// The report with its timing zeroed, for byte-for-byte comparisons.
    pub fn without_timing(&self) -> CheckReport {
        CheckReport { wall_ms: 0, ..self.clone() }
    }
}

/// Knobs for a harness run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    /// Wall-clock budget per check; instances not started in time are skipped.
    pub budget: Duration,
    /// Seeds the random parts of the corpora.
    pub seed: u64,
    /// Upper bound on the order of corpus graphs (defaults: 5 for single
    /// graphs, 4 per product factor, 9 for trees).
    pub max_n: Option<usize>,
    pub solver: SolverConfig,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            budget: Duration::from_secs(600),
            seed: 0,
            max_n: None,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub reports: Vec<CheckReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.skipped == 0
    }

    /// No failures, though some checks may have been skipped.
    pub fn no_failures(&self) -> bool {
        self.failed == 0
    }
}

/// Outcome of one corpus instance.
pub(crate) enum Verdict {
    Holds,
    Violated { expected: String, actual: String },
}

/// Collects assertions for one instance; every violated one is reported.
#[derive(Default)]
pub(crate) struct Expect {
    expected: Vec<String>,
    actual: Vec<String>,
}

impl Expect {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn that(&mut self, ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> &mut Self {
        if !ok {
            self.expected.push(expected.into());
            self.actual.push(actual.into());
        }
        self
    }

    pub fn eq(&mut self, what: &str, expected: usize, actual: usize) -> &mut Self {
        self.that(expected == actual, format!("{what} = {expected}"), format!("{what} = {actual}"))
    }

    pub fn ge(&mut self, what: &str, bound: usize, actual: usize) -> &mut Self {
        self.that(actual >= bound, format!("{what} >= {bound}"), format!("{what} = {actual}"))
    }

    pub fn le(&mut self, what: &str, bound: usize, actual: usize) -> &mut Self {
        self.that(actual <= bound, format!("{what} <= {bound}"), format!("{what} = {actual}"))
    }

    pub fn done(&mut self) -> Result<Verdict> {
        Ok(if self.expected.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Violated {
                expected: self.expected.join("; "),
                actual: self.actual.join("; "),
            }
        })
    }
}

type Probe = Box<dyn Fn(&SolverConfig) -> Result<Verdict> + Send + Sync>;

pub(crate) struct Instance {
    inputs: Vec<Graph>,
    probe: Probe,
}

pub(crate) fn instance(
    inputs: Vec<Graph>,
    probe: impl Fn(&SolverConfig) -> Result<Verdict> + Send + Sync + 'static,
) -> Instance {
    Instance { inputs, probe: Box::new(probe) }
}

/// Corpus sizes for one run.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Ctx {
    pub seed: u64,
    pub graph_n: usize,
    pub pair_n: usize,
    pub tree_n: usize,
}

impl Ctx {
    fn new(opts: &RunOptions) -> Self {
        let cap = |d: usize| opts.max_n.map_or(d, |m| m.min(d));
        Ctx {
            seed: opts.seed,
            graph_n: cap(5),
            pair_n: cap(4),
            tree_n: cap(9),
        }
    }
}

pub(crate) struct Check {
    pub info: CheckInfo,
    pub build: fn(&Ctx) -> Vec<Instance>,
}

/// Every registered check in a fixed order.
pub fn list_checks() -> Vec<CheckInfo> {
    checks::registry().iter().map(|c| c.info).collect()
}

enum Outcome {
    Ran(Verdict),
    Skipped,
}

pub fn run_check(id: &str, opts: &RunOptions) -> Result<CheckReport> {
    let registry = checks::registry();
    let check = registry
        .iter()
        .find(|c| c.info.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    Ok(execute(check, opts))
}

fn execute(check: &Check, opts: &RunOptions) -> CheckReport {
    let start = Instant::now();
    let info = check.info;
    let mut report = CheckReport {
        id: info.id.to_string(),
        citation: info.citation.to_string(),
        instances_run: 0,
        instances_skipped: 0,
        failures: Vec::new(),
        wall_ms: 0,
        status: Status::Skipped,
        note: info.skip.map(str::to_string),
    };
    if info.skip.is_some() {
        return report;
    }
    let instances = (check.build)(&Ctx::new(opts));
    let deadline = start + opts.budget;
    let outcomes: Vec<Outcome> = instances
        .par_iter()
        .map(|inst| {
            if Instant::now() > deadline {
                return Outcome::Skipped;
            }
            match (inst.probe)(&opts.solver) {
                Ok(v) => Outcome::Ran(v),
                Err(Error::Capacity { .. }) => Outcome::Skipped,
                Err(e) => Outcome::Ran(Verdict::Violated {
                    expected: "no error".into(),
                    actual: e.to_string(),
                }),
            }
        })
        .collect();
    for (inst, out) in instances.iter().zip(outcomes) {
        match out {
            Outcome::Skipped => report.instances_skipped += 1,
            Outcome::Ran(v) => {
                report.instances_run += 1;
                if let Verdict::Violated { expected, actual } = v {
                    report.failures.push(Failure {
                        inputs_graph6: inst.inputs.iter().map(write_graph6).collect(),
                        expected,
                        actual,
                    });
                }
            }
        }
    }
    report.status = if !report.failures.is_empty() {
        Status::Fail
    } else if report.instances_run == 0 || report.instances_skipped > 0 {
        report.note = Some(format!(
            "{} of {} instances skipped (capacity or budget)",
            report.instances_skipped,
            instances.len()
        ));
        Status::Skipped
    } else {
        Status::Pass
    };
    report.wall_ms = start.elapsed().as_millis() as u64;
    report
}

/// Runs every check whose id contains `filter` (all checks for an empty
/// filter), in registry order.
pub fn run_suite(filter: &str, opts: &RunOptions) -> SuiteSummary {
    let reports: Vec<CheckReport> = checks::registry()
        .iter()
        .filter(|c| c.info.id.contains(filter))
        .map(|c| execute(c, opts))
        .collect();
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    SuiteSummary {
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> RunOptions {
        RunOptions { max_n: Some(3), ..RunOptions::default() }
    }

    #[test]
    fn ids_are_unique_and_cited() {
        let checks = list_checks();
        let mut ids: Vec<&str> = checks.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), checks.len());
        assert!(checks.iter().all(|c| !c.citation.is_empty()));
    }

    #[test]
    fn unknown_id() {
        assert_eq!(
            run_check("no-such-check", &quick()).unwrap_err(),
            Error::UnknownCheck("no-such-check".into())
        );
    }

    #[test]
    fn registered_skips() {
        let r = run_check("q9-bound", &quick()).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert_eq!(r.instances_run, 0);
        assert!(r.note.is_some());
    }

    #[test]
    fn paths_pass_and_are_reproducible() {
        let a = run_check("paths-formulas", &quick()).unwrap();
        assert_eq!(a.status, Status::Pass);
        assert_eq!(a.instances_run, 20);
        let b = run_check("paths-formulas", &quick()).unwrap();
        assert_eq!(
            serde_json::to_string(&a.without_timing()).unwrap(),
            serde_json::to_string(&b.without_timing()).unwrap()
        );
    }

    #[test]
    fn exhausted_budget_skips() {
        let opts = RunOptions { budget: Duration::ZERO, ..quick() };
        let r = run_check("hypercube-nu", &opts).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.instances_skipped > 0);
    }

    #[test]
    fn capacity_skips_instead_of_passing() {
        let opts = RunOptions { solver: SolverConfig::with_cap(4), ..quick() };
        let r = run_check("paths-formulas", &opts).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.failures.is_empty());
    }

    #[test]
    fn suite_filter() {
        let s = run_suite("hamming", &quick());
        assert_eq!(s.reports.len(), 1);
        assert!(s.all_passed());
    }
}
