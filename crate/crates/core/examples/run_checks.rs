//! Running the named verification suites from code.

use stablegram::checks::{run_all, Check, CheckParams};

fn main() {
    let mut params = CheckParams::default();
    params.sampler.samples = 1000;
    let results = run_all(&Check::ALL, &params, true).unwrap();
    for r in &results {
        println!("{} {} {} ({} ms)", if r.passed { "PASS" } else { "FAIL" }, r.check, r.case, r.elapsed_ms.unwrap_or(0));
    }
    println!("{} cases, all passed: {}", results.len(), results.iter().all(|r| r.passed));
}
