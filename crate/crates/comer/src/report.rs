//! One-instance analysis bundled for presentation: the x <= y cycle lists,
//! canonical forbidden representatives, and the structural flags, with
//! deterministic text and JSON renderings.

use serde::Serialize;
use std::fmt::Write as _;

use crate::cosets::{build_coset_table, Parameters};
use crate::cycles::{classify, Cycle, CycleStatus};
use crate::equivalence::{canonical_forbidden_set, is_all_flexible, is_ramsey};

/// Everything the analyze command reports about one instance.
///
/// `forbidden` and `mandatory` are the cycles (0, x, y) with x <= y in
/// lexicographic order — together they cover each pair exactly once. The
/// x <= y view is a filter over the full grid; in the asymmetric case
/// (0, x, y) and (0, y, x) are genuinely different tests, and the grid keeps
/// both while the presentation shows the upper half.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub params: Parameters,
    pub forbidden: Vec<Cycle>,
    pub mandatory: Vec<Cycle>,
    pub canonical_forbidden: Vec<Cycle>,
    pub ramsey: bool,
    pub all_flexible: bool,
}

/// Classify one instance and derive the report.
pub fn analyze(params: Parameters) -> AnalysisReport {
    let table = build_coset_table(params);
    let structure = classify(&table);
    AnalysisReport {
        params,
        forbidden: structure.upper_cycles(CycleStatus::Forbidden),
        mandatory: structure.upper_cycles(CycleStatus::Mandatory),
        canonical_forbidden: canonical_forbidden_set(&structure).into_iter().collect(),
        ramsey: is_ramsey(&structure),
        all_flexible: is_all_flexible(&structure),
    }
}

// Field order is the output schema; cycles serialize as [a, b, c] arrays.
#[derive(Serialize)]
struct JsonReport<'a> {
    p: u64,
    n: usize,
    k: usize,
    g: u64,
    symmetric: bool,
    forbidden: &'a [Cycle],
    mandatory: &'a [Cycle],
    canonical_forbidden: &'a [Cycle],
    ramsey: bool,
    all_flexible: bool,
}

impl AnalysisReport {
    fn json_view(&self) -> JsonReport<'_> {
        JsonReport {
            p: self.params.p,
            n: self.params.n,
            k: self.params.k,
            g: self.params.g,
            symmetric: self.params.symmetric,
            forbidden: &self.forbidden,
            mandatory: &self.mandatory,
            canonical_forbidden: &self.canonical_forbidden,
            ramsey: self.ramsey,
            all_flexible: self.all_flexible,
        }
    }

    /// Compact single-line JSON with a fixed key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_view()).expect("report serialization cannot fail")
    }

    /// Plain-text rendering, one datum per line, trailing newline included.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p: {}", self.params.p).unwrap();
        writeln!(out, "n: {}", self.params.n).unwrap();
        writeln!(out, "k: {}", self.params.k).unwrap();
        writeln!(out, "g: {}", self.params.g).unwrap();
        writeln!(out, "symmetric: {}", self.params.symmetric).unwrap();
        writeln!(out, "forbidden ({}):", self.forbidden.len()).unwrap();
        for cycle in &self.forbidden {
            writeln!(out, "  {cycle}").unwrap();
        }
        writeln!(out, "mandatory ({}):", self.mandatory.len()).unwrap();
        for cycle in &self.mandatory {
            writeln!(out, "  {cycle}").unwrap();
        }
        writeln!(out, "canonical forbidden ({}):", self.canonical_forbidden.len()).unwrap();
        for cycle in &self.canonical_forbidden {
            writeln!(out, "  {cycle}").unwrap();
        }
        writeln!(out, "ramsey: {}", self.ramsey).unwrap();
        writeln!(out, "all flexible: {}", self.all_flexible).unwrap();
        out
    }
}

/// JSON array of reports, same per-report schema as [`AnalysisReport::to_json`].
pub fn to_json_array(reports: &[AnalysisReport]) -> String {
    let views: Vec<JsonReport<'_>> = reports.iter().map(|r| r.json_view()).collect();
    serde_json::to_string(&views).expect("report serialization cannot fail")
}
