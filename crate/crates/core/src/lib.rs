//! Exact arithmetic for the complementary second Zagreb index
//! `cM₂(G) = Σ_{uv ∈ E} |d(u)² − d(v)²|`.
//!
//! * [`graph`]: dense-label simple graphs, complete split graphs and their recognizer.
//! * [`orientation`]: mixed graphs and the degree orientation with its X/Y split.
//! * [`indices`]: cM₂, M₂, the arc and vertex reformulations, the split closed form.
//! * [`rewrites`]: cM₂-monotone moves and a hill climber that records certificates.
//! * [`search`]: exhaustive labeled scans for order ≤ 8 and structural predicates.
//! * [`io`]: graph6, edge lists, JSON/CSV reports, trace files.

mod bits;
pub mod error;
pub mod graph;
pub mod indices;
pub mod io;
pub mod orientation;
pub mod rewrites;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, SplitWitness, MAX_ORDER};
pub use indices::{cm2, cm2_arc_form, cm2_vertex_form, m2, optimal_m, split_closed_form, IndexValue, OptimalSplit};
pub use orientation::{partial_orientation, EdgeTag, MixedDegrees, MixedGraph, OrientationContext};
pub use rewrites::{
    apply_a, apply_b, apply_c, apply_move, climb, enumerate_moves, ClimbConfig, Move, MoveKind, Policy, RewriteTrace,
    TraceStep,
};
pub use search::{check_claims, enumerate_extremal, verify_conjecture, Claim, ClaimReport, ExtremalReport, ScanOptions, Verdict};
