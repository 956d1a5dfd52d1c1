//! Cycle classification: decide for every pair (i, j) whether the cycle
//! (0, i, j) is mandatory or forbidden.
//!
//! A cycle (0, i, j) is *forbidden* when (X_0 + X_i) ∩ X_j = ∅ and *mandatory*
//! otherwise. Two routes compute the same n×n answer grid:
//!
//! - [`classify_naive`] materializes each sumset X_0 + X_i as a bitmap and
//!   probes every element of every X_j — k² additions per row and k probes per
//!   cell, quadratic in p for fixed n. It is the trusted oracle and doubles as
//!   a runtime self-check: a sumset must contain each class entirely or miss
//!   it entirely, and any partial overlap is reported as an error.
//! - The fast classifiers exploit that coset sums are unions of cosets, so a
//!   single representative decides containment: (0, i, j) is forbidden iff
//!   (g^j − X_0) ∩ X_i = ∅, checkable with k class-index lookups
//!   ([`fast_test`]). Sweeping only a triangle of the grid and completing the
//!   rest by symmetry (k even) or by the half-turn equivalence
//!   (0,i,j) ~ (0, j+m, i+m) with m = n/2 (k odd) gives a total cost linear
//!   in p for fixed n.

use serde::ser::{Serialize, SerializeTuple, Serializer};
use std::fmt;

use crate::cosets::{CosetTable, Parameters};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleStatus {
    Mandatory,
    Forbidden,
}

impl fmt::Display for CycleStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycleStatus::Mandatory => "mandatory",
            CycleStatus::Forbidden => "forbidden",
        })
    }
}

/// A triple of class indices (a, b, c); the normalized presentation has
/// a = 0. Ordering and equality are plain lexicographic on (a, b, c).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Cycle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        Cycle { a, b, c }
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

// serialized as a bare [a, b, c] array to keep the JSON schema compact
impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tuple = serializer.serialize_tuple(3)?;
        tuple.serialize_element(&self.a)?;
        tuple.serialize_element(&self.b)?;
        tuple.serialize_element(&self.c)?;
        tuple.end()
    }
}

/// The full n×n classification grid: `status(i, j)` answers for (0, i, j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleStructure {
    params: Parameters,
    status: Vec<CycleStatus>,
}

impl CycleStructure {
    fn new_filled(params: Parameters) -> Self {
        CycleStructure {
            status: vec![CycleStatus::Mandatory; params.n * params.n],
            params,
        }
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, status: CycleStatus) {
        self.status[i * self.params.n + j] = status;
    }

    pub fn params(&self) -> &Parameters {
        &self.params
    }

    #[inline]
    pub fn status(&self, i: usize, j: usize) -> CycleStatus {
        self.status[i * self.params.n + j]
    }

    /// All cycles (0, x, y) with x <= y carrying the wanted status, in
    /// lexicographic order — the presentation convention used in reports.
    pub fn upper_cycles(&self, wanted: CycleStatus) -> Vec<Cycle> {
        let n = self.params.n;
        let mut cycles = Vec::new();
        for x in 0..n {
            for y in x..n {
                if self.status(x, y) == wanted {
                    cycles.push(Cycle::new(0, x, y));
                }
            }
        }
        cycles
    }

    /// Every forbidden grid cell (i, j), unrestricted.
    pub fn forbidden_cells(&self) -> Vec<(usize, usize)> {
        let n = self.params.n;
        let mut cells = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.status(i, j) == CycleStatus::Forbidden {
                    cells.push((i, j));
                }
            }
        }
        cells
    }
}

/// Dense membership bitmap over the residues 0..p.
pub struct ResidueSet {
    blocks: Vec<u64>,
}

impl ResidueSet {
    pub fn new(modulus: u64) -> Self {
        ResidueSet {
            blocks: vec![0; (modulus as usize).div_ceil(64)],
        }
    }

    #[inline]
    pub fn insert(&mut self, r: u64) {
        self.blocks[(r >> 6) as usize] |= 1 << (r & 63);
    }

    #[inline]
    pub fn contains(&self, r: u64) -> bool {
        self.blocks[(r >> 6) as usize] >> (r & 63) & 1 == 1
    }

    /// Drop all members but keep the allocation for reuse.
    pub fn clear(&mut self) {
        self.blocks.fill(0);
    }

    /// The members in increasing order (test and debugging helper).
    pub fn members(&self) -> Vec<u64> {
        let mut members = Vec::new();
        for (block_index, &block) in self.blocks.iter().enumerate() {
            let mut bits = block;
            while bits != 0 {
                members.push(block_index as u64 * 64 + bits.trailing_zeros() as u64);
                bits &= bits - 1;
            }
        }
        members
    }
}

/// Operation counters for the cost model behind the benchmark output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorkCount {
    /// Modular additions/subtractions spent building sumsets or difference rows.
    pub additions: u64,
    /// Bitmap probes (naive) or class-index lookups (fast).
    pub membership_checks: u64,
    /// Pair verdicts actually computed (mirror-filled cells not included).
    pub containment_tests: u64,
}

impl WorkCount {
    /// The membership/containment check total reported as `tests` in CSV.
    pub fn tests(&self) -> u64 {
        self.membership_checks + self.containment_tests
    }
}

/// X_i + X_j as a bitmap: all k² pairwise sums reduced mod p.
pub fn sumset(table: &CosetTable, i: usize, j: usize) -> ResidueSet {
    let mut sums = ResidueSet::new(table.params().p);
    fill_sumset(&mut sums, table, i, j);
    sums
}

fn fill_sumset(sums: &mut ResidueSet, table: &CosetTable, i: usize, j: usize) {
    let p = table.params().p;
    for &x in table.class(i) {
        for &y in table.class(j) {
            sums.insert((x + y) % p);
        }
    }
}

/// Quadratic oracle: classify every (0, i, j) straight from the definition.
pub fn classify_naive(table: &CosetTable) -> Result<CycleStructure, Error> {
    classify_naive_with_work(table).map(|(structure, _)| structure)
}

/// Oracle plus operation counts. Every cell of the grid gets its own direct
/// test — no symmetry shortcuts — so this output is fit to cross-check the
/// fast classifiers' completion logic, not just their sweeps. The full
/// intersection size is counted per cell, and a size strictly between 0 and k
/// (impossible if the implementation is right) is reported as
/// [`Error::PartialCover`].
pub fn classify_naive_with_work(table: &CosetTable) -> Result<(CycleStructure, WorkCount), Error> {
    let params = *table.params();
    let n = params.n;
    let k = params.k;
    let mut structure = CycleStructure::new_filled(params);
    let mut work = WorkCount::default();
    let mut sums = ResidueSet::new(params.p);
    for i in 0..n {
        sums.clear();
        fill_sumset(&mut sums, table, 0, i);
        work.additions += (k * k) as u64;
        work.membership_checks += (n * k) as u64;
        work.containment_tests += n as u64;
        let row = &mut structure.status[i * n..(i + 1) * n];
        for (j, (slot, class)) in row.iter_mut().zip(table.classes()).enumerate() {
            let mut inside = 0;
            for &x in class {
                inside += sums.contains(x) as usize;
            }
            *slot = if inside == k {
                CycleStatus::Mandatory
            } else if inside == 0 {
                CycleStatus::Forbidden
            } else {
                return Err(Error::PartialCover { i, j });
            };
        }
    }
    Ok((structure, work))
}

/// Precomputed difference rows: row j holds (g^j − x) mod p for x ∈ X_0.
///
/// The fast test asks whether some element of such a row lies in X_i; storing
/// the rows once costs nk subtractions and lets every subsequent test run on
/// class-index lookups alone.
pub struct DifferenceTable {
    k: usize,
    diffs: Vec<u64>,
}

impl DifferenceTable {
    pub fn build(table: &CosetTable) -> Self {
        let params = table.params();
        let (p, n, k) = (params.p, params.n, params.k);
        let mut diffs = Vec::with_capacity(n * k);
        for j in 0..n {
            let gj = table.class(j)[0];
            for &x in table.class(0) {
                diffs.push((gj + p - x) % p);
            }
        }
        DifferenceTable { k, diffs }
    }

    #[inline]
    pub fn row(&self, j: usize) -> &[u64] {
        &self.diffs[j * self.k..(j + 1) * self.k]
    }
}

/// Single-representative test: (0, i, j) is forbidden iff no element of
/// g^j − X_0 lands in class i. At most k lookups, stopping at the first hit.
pub fn fast_test(
    table: &CosetTable,
    diffs: &DifferenceTable,
    i: usize,
    j: usize,
) -> CycleStatus {
    let mut probes = 0;
    fast_test_counted(table, diffs, i, j, &mut probes)
}

#[inline]
fn fast_test_counted(
    table: &CosetTable,
    diffs: &DifferenceTable,
    i: usize,
    j: usize,
    probes: &mut u64,
) -> CycleStatus {
    // a difference can be 0 (when g^j ∈ X_0); raw_class maps it to the
    // identity sentinel, which never equals a real class index
    let target = i as u8;
    for (seen, &d) in diffs.row(j).iter().enumerate() {
        if table.raw_class(d) == target {
            *probes += seen as u64 + 1;
            return CycleStatus::Mandatory;
        }
    }
    *probes += diffs.row(j).len() as u64;
    CycleStatus::Forbidden
}

/// Fast classifier for symmetric instances (k even).
///
/// Sweeps the triangle j >= i and mirrors across the diagonal, which is valid
/// because X_j ⊆ X_0 + X_i and X_i ⊆ X_0 + X_j are equivalent when every
/// class equals its own negation.
pub fn classify_fast_symmetric(table: &CosetTable) -> Result<CycleStructure, Error> {
    if !table.params().symmetric {
        return Err(Error::NotSymmetric(table.params().k));
    }
    let mut work = WorkCount::default();
    Ok(symmetric_sweep(table, &mut work))
}

fn symmetric_sweep(table: &CosetTable, work: &mut WorkCount) -> CycleStructure {
    let params = *table.params();
    let n = params.n;
    let diffs = DifferenceTable::build(table);
    work.additions += (n * params.k) as u64;
    let mut structure = CycleStructure::new_filled(params);
    for i in 0..n {
        for j in i..n {
            let status = fast_test_counted(table, &diffs, i, j, &mut work.membership_checks);
            work.containment_tests += 1;
            structure.set(i, j, status);
            structure.set(j, i, status);
        }
    }
    structure
}

/// Fast classifier for asymmetric instances (k odd, so n is even).
///
/// With m = n/2, the statuses of (0, i, j) and (0, j+m, i+m) coincide, and
/// the map (i, j) ↦ (j+m, i+m) is an involution on the grid. Re-indexing
/// columns by j = (t + m) mod n turns it into reflection across the main
/// diagonal of the (i, t) grid, so sweeping t >= i covers a transversal:
/// every remaining cell is the mirror of a swept one.
pub fn classify_fast_asymmetric(table: &CosetTable) -> Result<CycleStructure, Error> {
    if table.params().symmetric {
        return Err(Error::NotAsymmetric(format!(
            "coset size {} is even",
            table.params().k
        )));
    }
    let mut work = WorkCount::default();
    Ok(asymmetric_sweep(table, &mut work))
}

fn asymmetric_sweep(table: &CosetTable, work: &mut WorkCount) -> CycleStructure {
    let params = *table.params();
    let n = params.n;
    debug_assert_eq!(n % 2, 0, "odd coset size forces an even class count");
    let m = n / 2;
    let diffs = DifferenceTable::build(table);
    work.additions += (n * params.k) as u64;
    let mut structure = CycleStructure::new_filled(params);
    for i in 0..n {
        for t in i..n {
            let j = (t + m) % n;
            let status = fast_test_counted(table, &diffs, i, j, &mut work.membership_checks);
            work.containment_tests += 1;
            structure.set(i, j, status);
        }
    }
    // mirror pass: with j = (t+m) mod n the equivalence sends the swept cell
    // (i, j) to (t, (i+m) mod n); t > i enumerates exactly the unswept cells
    for i in 0..n {
        for t in i + 1..n {
            let status = structure.status(i, (t + m) % n);
            structure.set(t, (i + m) % n, status);
        }
    }
    structure
}

/// Parity dispatch to the matching fast classifier. Infallible: every valid
/// instance is one of the two parities.
pub fn classify(table: &CosetTable) -> CycleStructure {
    classify_with_work(table).0
}

/// [`classify`] plus the operation counts of the sweep it ran.
pub fn classify_with_work(table: &CosetTable) -> (CycleStructure, WorkCount) {
    let mut work = WorkCount::default();
    let structure = if table.params().symmetric {
        symmetric_sweep(table, &mut work)
    } else {
        asymmetric_sweep(table, &mut work)
    };
    (structure, work)
}
