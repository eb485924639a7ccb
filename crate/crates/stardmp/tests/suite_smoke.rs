use std::time::Instant;

use stardmp::suite::{run_all, RunConfig, SuiteVerdict};

#[test]
fn full_default_suite_runs_clean() {
    let t0 = Instant::now();
    let results = run_all(&RunConfig::default()).expect("suite runs");
    let elapsed = t0.elapsed();
    let mut failures = Vec::new();
    let mut vacuous = Vec::new();
    for r in &results {
        match r.verdict {
            SuiteVerdict::Fail => failures.push(format!(
                "{} on {}: {:?}",
                r.id, r.universe, r.violations
            )),
            SuiteVerdict::Vacuous => vacuous.push(format!("{} on {}", r.id, r.universe)),
            SuiteVerdict::Pass => {}
        }
    }
    eprintln!(
        "suite: {} results in {:.1?}; vacuous: {:?}",
        results.len(),
        elapsed,
        vacuous
    );
    assert!(failures.is_empty(), "failures:\n{}", failures.join("\n"));
}
