//! Runs the whole check suite and prints one line per check.
//!
//! cargo run --release --example theorem_checks [filter]

use eopack::harness::{run_suite, RunOptions, Status};

fn main() {
    let filter = std::env::args().nth(1).unwrap_or_default();
    let summary = run_suite(&filter, &RunOptions::default());
    for r in &summary.reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        println!("{status:4} {:28} run={:<5} {:>7} ms  {}", r.id, r.instances_run, r.wall_ms, r.note.as_deref().unwrap_or(""));
        for f in r.failures.iter().take(3) {
            println!("     {:?}: expected {}, got {}", f.inputs_graph6, f.expected, f.actual);
        }
    }
    println!("{} passed, {} failed, {} skipped", summary.passed, summary.failed, summary.skipped);
}
