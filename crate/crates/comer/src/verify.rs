//! Range cross-validation: run the quadratic oracle and the fast classifier
//! on every instance in a prime range and demand entrywise agreement.

use rayon::prelude::*;

use crate::cosets::{build_coset_table, make_parameters, MAX_CLASSES};
use crate::cycles::{classify, classify_naive, CycleStatus};
use crate::error::Error;
use crate::numtheory::{is_prime, PrimeModulus};

/// One disagreeing grid cell; seeing any of these means a classifier is wrong.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub p: u64,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub naive: CycleStatus,
    pub fast: CycleStatus,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Primes visited in the range.
    pub primes: u64,
    /// (p, n) instances actually classified.
    pub instances: u64,
    pub mismatches: Vec<Mismatch>,
}

/// Compare the classifiers on every prime in [p_min, p_max] and every divisor
/// n of p - 1 with n <= n_max (capped at the 255-class representation limit).
///
/// An empty range is a trivial success. Primes fan out across threads;
/// results are reassembled in ascending order, so output is deterministic.
/// A partial cover inside the oracle aborts the whole run with an error,
/// since it means the oracle itself cannot be trusted.
pub fn verify_range(p_min: u64, p_max: u64, n_max: usize) -> Result<VerifyReport, Error> {
    if p_max > PrimeModulus::MAX {
        return Err(Error::ModulusOutOfRange(p_max));
    }
    let primes: Vec<u64> = (p_min.max(3)..=p_max).filter(|&p| is_prime(p)).collect();
    let limit = n_max.min(MAX_CLASSES);
    let per_prime: Vec<(u64, Vec<Mismatch>)> = primes
        .par_iter()
        .map(|&p| -> Result<(u64, Vec<Mismatch>), Error> {
            let mut instances = 0;
            let mut mismatches = Vec::new();
            for n in 1..=limit {
                if (p - 1) % n as u64 != 0 {
                    continue;
                }
                let table = build_coset_table(make_parameters(p, n, None)?);
                let naive = classify_naive(&table)?;
                let fast = classify(&table);
                instances += 1;
                if naive != fast {
                    for i in 0..n {
                        for j in 0..n {
                            if naive.status(i, j) != fast.status(i, j) {
                                mismatches.push(Mismatch {
                                    p,
                                    n,
                                    i,
                                    j,
                                    naive: naive.status(i, j),
                                    fast: fast.status(i, j),
                                });
                            }
                        }
                    }
                }
            }
            Ok((instances, mismatches))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mut report = VerifyReport {
        primes: primes.len() as u64,
        ..VerifyReport::default()
    };
    for (instances, mismatches) in per_prime {
        report.instances += instances;
        report.mismatches.extend(mismatches);
    }
    Ok(report)
}
