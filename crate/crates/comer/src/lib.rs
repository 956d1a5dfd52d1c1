//! Comer's cyclic-group relation algebras over ℤ/pℤ: construction, cycle
//! classification, orbit canonicalization, cross-validation, search, and a
//! timing harness.
//!
//! For a prime p = nk + 1 and a primitive root g, the nonzero residues split
//! into n classes X_0, …, X_{n−1} (the cosets of the n-th power residues).
//! A cycle (0, i, j) is *forbidden* when (X_0 + X_i) ∩ X_j = ∅ and
//! *mandatory* otherwise; the pattern of forbidden cycles is the instance's
//! cycle structure. Two independent classifiers compute it:
//!
//! - a quadratic-time oracle straight from the definition ([`classify_naive`]),
//! - a linear-time classifier that decides each cycle from a single
//!   representative with k table lookups, sweeping only a triangle of the
//!   grid and completing the rest by status-preserving equivalences
//!   ([`classify`]).
//!
//! On top of the classifiers sit orbit computation and canonical forms
//! ([`orbit`], [`canonical_forbidden_set`]), structural predicates
//! ([`is_ramsey`], [`is_all_flexible`]), range cross-validation
//! ([`verify_range`]), prime search ([`search_primes`]), and benchmarking
//! ([`bench`]).
//!
//! ```
//! let params = comer::make_parameters(113, 7, None)?;
//! assert_eq!((params.k, params.g), (16, 3));
//!
//! let report = comer::analyze(params);
//! let triples: Vec<(usize, usize, usize)> =
//!     report.forbidden.iter().map(|c| (c.a, c.b, c.c)).collect();
//! assert_eq!(triples, vec![(0, 0, 0), (0, 0, 4), (0, 3, 3)]);
//! # Ok::<(), comer::Error>(())
//! ```

pub mod bench;
pub mod cli;
pub mod cosets;
pub mod cycles;
pub mod equivalence;
pub mod error;
pub mod numtheory;
pub mod report;
pub mod search;
pub mod verify;

pub use cosets::{build_coset_table, make_parameters, CosetTable, Parameters, IDENTITY_CLASS, MAX_CLASSES};
pub use cycles::{
    classify, classify_fast_asymmetric, classify_fast_symmetric, classify_naive,
    classify_naive_with_work, classify_with_work, fast_test, sumset, Cycle, CycleStatus,
    CycleStructure, DifferenceTable, ResidueSet, WorkCount,
};
pub use equivalence::{
    canonical_forbidden_set, involution_image, is_all_flexible, is_ramsey, orbit, shift_cycle,
    CycleOrbit,
};
pub use error::Error;
pub use report::{analyze, AnalysisReport};
pub use search::{search_primes, StructureFilter};
pub use verify::{verify_range, Mismatch, VerifyReport};
