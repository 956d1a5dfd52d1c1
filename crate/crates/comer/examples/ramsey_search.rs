//! Scan primes for Ramsey-like structures: instances whose only forbidden
//! cycles are the monochrome ones. Such algebras witness lower bounds for
//! Ramsey-type edge colorings; this scan lists every witness below the
//! cutoff for each class count n <= 6.
//!
//!     cargo run --release --example ramsey_search

use comer::{search_primes, StructureFilter};

fn main() -> Result<(), comer::Error> {
    let p_max = 5000;
    println!("ramsey instances with p <= {p_max}:");
    for n in 1..=6 {
        let hits = search_primes(n, 3, p_max, StructureFilter::Ramsey)?;
        let primes: Vec<String> = hits.iter().map(|r| r.params.p.to_string()).collect();
        println!(
            "  n={n}: {}",
            if primes.is_empty() { "none".to_string() } else { primes.join(", ") }
        );
    }
    Ok(())
}
