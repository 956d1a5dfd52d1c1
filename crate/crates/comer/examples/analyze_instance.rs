//! Classify one instance end to end and print everything the library derives
//! from it, plus the full n x n status grid that the report's x <= y lists
//! summarize.
//!
//!     cargo run --release --example analyze_instance [-- <p> <n>]

use std::env;

use comer::cycles::{classify, CycleStatus};
use comer::{analyze, build_coset_table, make_parameters};

fn main() -> Result<(), comer::Error> {
    let mut args = env::args().skip(1);
    let p: u64 = args.next().map_or(Ok(113), |a| a.parse()).expect("p must be an integer");
    let n: usize = args.next().map_or(Ok(7), |a| a.parse()).expect("n must be an integer");

    let params = make_parameters(p, n, None)?;
    let report = analyze(params);
    print!("{}", report.to_text());

    // the grid behind those lists: rows are i, columns j, entry is the status
    // of the cycle (0, i, j); '.' mandatory, 'F' forbidden
    let structure = classify(&build_coset_table(params));
    println!("grid:");
    for i in 0..n {
        let row: String = (0..n)
            .map(|j| match structure.status(i, j) {
                CycleStatus::Mandatory => '.',
                CycleStatus::Forbidden => 'F',
            })
            .collect();
        println!("  {row}");
    }
    Ok(())
}
