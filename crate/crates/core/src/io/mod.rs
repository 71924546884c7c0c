//! Serialization: graph6, edge lists, scan reports and rewrite traces.

pub mod edgelist;
pub mod graph6;
pub mod report;
pub mod trace;

use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    Graph6,
    EdgeList,
}

/// Reads one graph. graph6 input uses the first non-blank line.
pub fn read_graph(text: &str, format: GraphFormat, one_based: bool) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => graph6::decode(text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("")),
        GraphFormat::EdgeList => edgelist::parse(text, one_based),
    }
}
