//! Cross-check the linear-time classifiers against the quadratic oracle over
//! every valid instance in a range, the same sweep the `verify` subcommand
//! runs. Exits nonzero if any cell ever disagrees.
//!
//!     cargo run --release --example cross_check

use std::process::ExitCode;

use comer::verify_range;

fn main() -> ExitCode {
    let (p_min, p_max, n_max) = (3, 500, 30);
    let report = match verify_range(p_min, p_max, n_max) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("verification aborted: {err}");
            return ExitCode::FAILURE;
        }
    };
    println!(
        "checked {} instances across {} primes ({p_min} <= p <= {p_max}, n <= {n_max})",
        report.instances, report.primes
    );
    if report.mismatches.is_empty() {
        println!("fast classifiers agree with the naive oracle on every cell");
        return ExitCode::SUCCESS;
    }
    for mm in &report.mismatches {
        println!(
            "mismatch at p={} n={} cell=({}, {}): naive says {}, fast says {}",
            mm.p, mm.n, mm.i, mm.j, mm.naive, mm.fast
        );
    }
    ExitCode::FAILURE
}
