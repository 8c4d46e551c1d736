//! Runs without the libtest harness so the per-criterion lines always print.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use unstable_ops::verify::{criterion, worked_examples, CRITERIA};

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for n in 1..=CRITERIA {
        let start = Instant::now();
        let check = criterion(n).expect("criterion index in range");
        let elapsed = start.elapsed();
        let pass = check.pass && elapsed < Duration::from_secs(10);
        println!(
            "criterion {n:>2}: {} ({:.2?}) {} | {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed,
            check.description,
            check.detail
        );
        if !pass {
            failed.push(format!("criterion {n}"));
        }
    }
    for c in worked_examples() {
        println!("example {:<22} {} {}", c.id, if c.pass { "PASS" } else { "FAIL" }, c.description);
        if !c.pass {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {failed:?}");
        ExitCode::FAILURE
    }
}
