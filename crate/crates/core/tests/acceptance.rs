//! Runs the eight acceptance suites and prints one line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use lambdaring::selftest::{run_suite, SUITES};

const BUDGET_SECS: [u64; 8] = [60, 120, 30, 120, 10, 180, 60, 30];

fn main() -> ExitCode {
    let mut failed = 0;
    for (k, name) in SUITES.iter().enumerate() {
        let start = Instant::now();
        let report = run_suite(k + 1, 0);
        let secs = start.elapsed().as_secs_f64();
        let in_budget = secs <= BUDGET_SECS[k] as f64;
        let ok = report.all_passed() && in_budget;
        let status = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {status} {name} ({} checks, {secs:.2}s, budget {}s)",
            k + 1,
            report.checks.len(),
            BUDGET_SECS[k]
        );
        if !ok {
            failed += 1;
            if !in_budget {
                println!("  FAIL runtime: {secs:.2}s over budget");
            }
            for c in report.failures() {
                println!("  FAIL {}: {}", c.name, c.detail);
            }
        }
    }
    println!("{} of {} criteria passed", SUITES.len() - failed, SUITES.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
