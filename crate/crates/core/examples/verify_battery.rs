//! The full residual battery, as `gammabnd verify` runs it.

use gammabnd::verify::{run_battery, VerifyOptions};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let report = run_battery(&VerifyOptions { seed, ..Default::default() });
    for c in &report.checks {
        println!(
            "{:<22} {:>10.2e}  (limit {:.0e})  {}",
            c.check,
            c.max_residual,
            c.threshold,
            if c.passed { "pass" } else { "FAIL" }
        );
    }
    println!("seed {seed}: {}", if report.passed { "all checks pass" } else { "failures" });
}
