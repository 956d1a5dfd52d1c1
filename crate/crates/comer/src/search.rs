//! Prime-range search: analyze every prime p ≡ 1 (mod n) in a range and keep
//! the instances whose structure matches a filter.

use clap::ValueEnum;
use rayon::prelude::*;

use crate::cosets::{make_parameters, MAX_CLASSES};
use crate::error::Error;
use crate::numtheory::{is_prime, PrimeModulus};
use crate::report::{analyze, AnalysisReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StructureFilter {
    /// Exactly the monochrome cycle (0,0,0) is forbidden.
    Ramsey,
    /// No forbidden cycles at all.
    Flexible,
    /// Keep every analyzed instance.
    None,
}

impl StructureFilter {
    fn keeps(self, report: &AnalysisReport) -> bool {
        match self {
            StructureFilter::Ramsey => report.ramsey,
            StructureFilter::Flexible => report.all_flexible,
            StructureFilter::None => true,
        }
    }
}

/// Reports for the matching primes, in ascending order of p. Analysis fans
/// out across threads; order restoration makes the output deterministic.
pub fn search_primes(
    n: usize,
    p_min: u64,
    p_max: u64,
    filter: StructureFilter,
) -> Result<Vec<AnalysisReport>, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "class count n must be at least 1".into(),
        ));
    }
    if n > MAX_CLASSES {
        return Err(Error::TooManyClasses(n));
    }
    if p_max > PrimeModulus::MAX {
        return Err(Error::ModulusOutOfRange(p_max));
    }
    let candidates: Vec<u64> = (p_min.max(3)..=p_max)
        .filter(|&p| (p - 1) % n as u64 == 0 && is_prime(p))
        .collect();
    let reports = candidates
        .par_iter()
        .map(|&p| Ok(analyze(make_parameters(p, n, None)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(reports.into_iter().filter(|r| filter.keeps(r)).collect())
}
