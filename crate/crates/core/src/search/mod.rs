//! Exhaustive small-order verification that cM₂ is maximized exactly by
//! complete split graphs, and the structural predicates behind it.

mod claims;
mod enumerate;

pub use claims::{check_claims, Claim, ClaimOutcome, ClaimReport};
pub use enumerate::{enumerate_extremal, ExtremalReport, ScanOptions, MAX_SCAN_ORDER};

use crate::error::Result;
use crate::graph::Graph;
use crate::io::graph6;

#[derive(Debug, Clone)]
pub struct Verdict {
    pub passed: bool,
    pub report: ExtremalReport,
    /// Smallest (by graph6) maximizer that is not a complete split graph.
    pub counterexample: Option<Graph>,
}

/// Passes iff the scanned maximum equals the best complete split value and
/// every labeled maximizer is recognized as complete split.
pub fn verify_conjecture(n: usize, opts: &ScanOptions) -> Result<Verdict> {
    let report = enumerate_extremal(n, opts)?;
    let counterexample = report
        .first_counterexample
        .as_deref()
        .map(graph6::decode)
        .transpose()?;
    Ok(Verdict {
        passed: report.verified(),
        report,
        counterexample,
    })
}
