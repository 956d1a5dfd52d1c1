//! Time both classifiers over a ladder of primes with a fixed class count and
//! fit log-log slopes: the naive oracle should trend toward quadratic in p,
//! the fast path toward linear. A smaller cutoff than the CLI default keeps
//! this example interactive; push p_max up to widen the gap.
//!
//!     cargo run --release --example scaling_benchmark

use std::collections::BTreeMap;

use comer::bench::{fitted_slope, run, Algorithm, BenchOptions};

fn main() -> Result<(), comer::Error> {
    let options = BenchOptions {
        n: 23,
        p_max: 3000,
        algorithms: vec![Algorithm::Naive, Algorithm::Fast],
        repetitions: 3,
    };
    let records = run(&options)?;

    let mut by_prime: BTreeMap<u64, [f64; 2]> = BTreeMap::new();
    for r in &records {
        let slot = by_prime.entry(r.p).or_insert([0.0; 2]);
        slot[matches!(r.algorithm, Algorithm::Fast) as usize] = r.seconds;
    }
    println!("{:>6} {:>12} {:>12} {:>8}", "p", "naive (us)", "fast (us)", "ratio");
    for (p, [naive, fast]) in by_prime {
        println!(
            "{p:>6} {:>12.1} {:>12.1} {:>8.1}",
            naive * 1e6,
            fast * 1e6,
            naive / fast
        );
    }
    for algorithm in [Algorithm::Naive, Algorithm::Fast] {
        if let Some(slope) = fitted_slope(&records, algorithm) {
            println!("fitted log-log slope {algorithm}: {slope:.3}");
        }
    }
    Ok(())
}
