//! Run a subset of the verification suites and print a summary.
//!
//!     cargo run --release --example verify

use hulthen::report::{verify, Suite, VerifyOptions};

fn main() {
    let opts = VerifyOptions {
        suites: vec![
            Suite::Spectrum,
            Suite::Contiguous,
            Suite::Ode,
            Suite::Table1,
        ],
        ..Default::default()
    };
    let report = verify(&opts);
    for c in report
        .checks
        .iter()
        .filter(|c| c.expected_failure || !c.pass)
    {
        println!(
            "{:<10} {:<5} {:.3e}  {}",
            format!("{:?}", c.suite).to_lowercase(),
            if c.pass { "ok" } else { "FAIL" },
            c.residual,
            c.case
        );
    }
    println!(
        "{}/{} checks pass",
        report.summary.passed, report.summary.total
    );
}
