//! Versioned JSON documents and one-line CSV summaries for scan reports.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::indices::IndexValue;
use crate::search::ExtremalReport;

pub const FORMAT_VERSION: u32 = 1;

pub const CSV_HEADER: &str = "n,global_max,closed_form_max,m_star,maximizer_count,verified";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format_version: u32,
    pub n: usize,
    pub verified: bool,
    pub global_max: IndexValue,
    pub closed_form_max: IndexValue,
    pub optimal_ms: Vec<usize>,
    pub maximizer_count: u64,
    pub non_split_maximizers: u64,
    pub claim_failures: u64,
    pub above_closed_form: u64,
    pub sample_witnesses: Vec<String>,
    pub first_counterexample: Option<String>,
    pub graphs_scanned: u64,
    pub elapsed_ms: u64,
}

impl From<&ExtremalReport> for ReportDocument {
    fn from(r: &ExtremalReport) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            n: r.n,
            verified: r.verified(),
            global_max: r.global_max,
            closed_form_max: r.closed_form_max,
            optimal_ms: r.optimal_ms.clone(),
            maximizer_count: r.maximizer_count,
            non_split_maximizers: r.non_split_maximizers,
            claim_failures: r.claim_failures,
            above_closed_form: r.above_closed_form,
            sample_witnesses: r.sample_witnesses.clone(),
            first_counterexample: r.first_counterexample.clone(),
            graphs_scanned: r.graphs_scanned,
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }
}

impl From<ReportDocument> for ExtremalReport {
    fn from(d: ReportDocument) -> Self {
        Self {
            n: d.n,
            global_max: d.global_max,
            closed_form_max: d.closed_form_max,
            optimal_ms: d.optimal_ms,
            maximizer_count: d.maximizer_count,
            non_split_maximizers: d.non_split_maximizers,
            claim_failures: d.claim_failures,
            above_closed_form: d.above_closed_form,
            sample_witnesses: d.sample_witnesses,
            first_counterexample: d.first_counterexample,
            graphs_scanned: d.graphs_scanned,
            elapsed: Duration::from_millis(d.elapsed_ms),
        }
    }
}

pub fn to_json(report: &ExtremalReport) -> String {
    serde_json::to_string_pretty(&ReportDocument::from(report)).expect("report serializes")
}

pub fn from_json(text: &str) -> serde_json::Result<ReportDocument> {
    serde_json::from_str(text)
}

pub fn csv_row(report: &ExtremalReport) -> String {
    format!(
        "{},{},{},{},{},{}",
        report.n,
        report.global_max,
        report.closed_form_max,
        report.m_star(),
        report.maximizer_count,
        report.verified()
    )
}
