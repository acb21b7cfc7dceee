//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use eppo::suite::{determinism, run_criterion, SuiteConfig};

const CATALOG_BUDGET: Duration = Duration::from_secs(300);

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut results = Vec::new();
    let mut ok = true;
    for id in 1..=10 {
        let start = Instant::now();
        let r = run_criterion(id, &cfg).expect("criteria 1 to 10 exist");
        let elapsed = start.elapsed();
        println!("{r}");
        ok &= r.passed();
        if id == 1 && elapsed > CATALOG_BUDGET {
            println!("criterion  1 catalog took {elapsed:?}, over the {CATALOG_BUDGET:?} budget");
            ok = false;
        }
        results.push(r);
    }
    let d = determinism(&results, &cfg);
    println!("{d}");
    ok &= d.passed();
    for r in results.iter().chain([&d]).filter(|r| !r.passed()) {
        for f in &r.failures {
            println!("  criterion {}: {f}", r.id);
        }
    }
    println!("acceptance: {}", if ok { "all criteria passed" } else { "FAILED" });
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
