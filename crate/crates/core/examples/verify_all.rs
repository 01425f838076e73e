//! Runs every property suite and prints a summary.

use orbifold_degree::verify::{run_suite, VerifyConfig};

fn main() -> orbifold_degree::Result<()> {
    let reports = run_suite("all", &VerifyConfig::default())?;
    for r in &reports {
        let status = if r.passed() { "ok" } else { "FAILED" };
        println!("{:<20} {:>5} cases  {status}", r.name, r.cases);
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
    Ok(())
}
