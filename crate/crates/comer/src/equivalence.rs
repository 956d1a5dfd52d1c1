//! Status-preserving cycle equivalences, orbit closure, and canonical
//! representatives.
//!
//! Three facts generate the equivalences used here:
//!
//! - shifting all three indices by the same amount preserves status, because
//!   multiplying through by g^s carries (X_a + X_b) ∩ X_c to the shifted
//!   triple verbatim;
//! - the two summands commute, so (a, b, c) and (b, a, c) agree;
//! - when k is even every class is its own negative and any rearrangement of
//!   the triple preserves status; when k is odd, negation swaps X_i with
//!   X_{i+m} (m = n/2) and the half-turn map (0, i, j) ↦ (0, j+m, i+m) is a
//!   status-preserving involution.
//!
//! Closing a cycle under these generators yields its orbit; the lexicographic
//! least normalized member is the orbit's canonical name.

use std::collections::{BTreeSet, VecDeque};

use crate::cosets::Parameters;
use crate::cycles::{Cycle, CycleStatus, CycleStructure};
use crate::error::Error;

/// Add `shift` to every index mod n. Status-preserving for any shift.
pub fn shift_cycle(n: usize, cycle: Cycle, shift: usize) -> Cycle {
    Cycle::new(
        (cycle.a + shift) % n,
        (cycle.b + shift) % n,
        (cycle.c + shift) % n,
    )
}

/// The half-turn involution (0, i, j) ↦ (0, (j+m) mod n, (i+m) mod n) with
/// m = n/2. Only asymmetric instances (even n) have it; odd n is rejected.
pub fn involution_image(n: usize, cycle: Cycle) -> Result<Cycle, Error> {
    if n % 2 != 0 {
        return Err(Error::NotAsymmetric(format!("class count {n} is odd")));
    }
    let m = n / 2;
    Ok(Cycle::new(
        cycle.a,
        (cycle.c + m) % n,
        (cycle.b + m) % n,
    ))
}

/// An equivalence class of cycles: all normalized members plus the canonical
/// (lexicographically least) one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleOrbit {
    /// Normalized members (leading index 0), in lexicographic order.
    pub members: Vec<Cycle>,
    pub canon: Cycle,
}

/// Breadth-first closure of a normalized cycle under the status-preserving
/// generators for this instance's parity.
///
/// The walk runs over raw (possibly unnormalized) triples — renormalization
/// is just one more shift, so the normalized members are exactly the visited
/// triples with leading index 0.
pub fn orbit(params: &Parameters, cycle: Cycle) -> CycleOrbit {
    debug_assert_eq!(cycle.a, 0, "orbit expects a normalized cycle");
    let n = params.n;
    let start = (cycle.a % n, cycle.b % n, cycle.c % n);
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some((a, b, c)) = queue.pop_front() {
        let mut neighbors = [None; 3];
        neighbors[0] = Some(((a + 1) % n, (b + 1) % n, (c + 1) % n));
        neighbors[1] = Some((b, a, c));
        if params.symmetric {
            // with the swap above this generates all six rearrangements
            neighbors[2] = Some((a, c, b));
        } else if a == 0 {
            let m = n / 2;
            neighbors[2] = Some((0, (c + m) % n, (b + m) % n));
        }
        for state in neighbors.into_iter().flatten() {
            if seen.insert(state) {
                queue.push_back(state);
            }
        }
    }
    let members: Vec<Cycle> = seen
        .iter()
        .filter(|&&(a, _, _)| a == 0)
        .map(|&(a, b, c)| Cycle::new(a, b, c))
        .collect();
    let canon = members[0];
    CycleOrbit { members, canon }
}

/// One canonical representative per forbidden orbit, collected from the full
/// grid (not just the x <= y presentation).
pub fn canonical_forbidden_set(structure: &CycleStructure) -> BTreeSet<Cycle> {
    let params = structure.params();
    let mut canons = BTreeSet::new();
    for (i, j) in structure.forbidden_cells() {
        canons.insert(orbit(params, Cycle::new(0, i, j)).canon);
    }
    canons
}

/// Is the structure Ramsey-like: forbidden pairs (x <= y) exactly {(0,0,0)}?
/// Every monochrome cycle (i, i, i) shifts to (0, 0, 0), so this one entry
/// stands for all of them.
pub fn is_ramsey(structure: &CycleStructure) -> bool {
    let n = structure.params().n;
    if structure.status(0, 0) != CycleStatus::Forbidden {
        return false;
    }
    for x in 0..n {
        for y in x..n {
            if (x, y) != (0, 0) && structure.status(x, y) == CycleStatus::Forbidden {
                return false;
            }
        }
    }
    true
}

/// Is every diversity cycle mandatory?
pub fn is_all_flexible(structure: &CycleStructure) -> bool {
    let n = structure.params().n;
    (0..n).all(|i| (0..n).all(|j| structure.status(i, j) == CycleStatus::Mandatory))
}
