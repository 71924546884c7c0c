//! Structural predicates that every cM₂-maximizer satisfies, evaluated
//! literally on the degree orientation of an arbitrary graph.

use std::fmt;

use serde::Serialize;

use crate::graph::Graph;
use crate::orientation::OrientationContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// Nonadjacent `u, v ∈ X` have equal degree, and no other X vertex shares it.
    NonadjacentXPairs,
    /// Every `u ∈ X` has at least `|X| − 2` neighbours in X.
    XNearlyComplete,
    /// No undirected edge of the orientation lies inside Y.
    NoUndirectedEdgeInY,
    /// If `v ∈ Y` only receives arcs from X, every X-neighbour of `v` points at it.
    XNeighborsPointIntoY,
    /// Y is an independent set.
    YIndependent,
    /// Every X–Y edge is an arc from X into Y.
    XYEdgesPointToY,
    /// For `u, v ∈ X` with `d(u) ≥ d(v)`: `N⁺(u) ∩ Y ⊇ N⁺(v) ∩ Y`.
    NestedOutNeighborhoods,
    /// `N⁺(u) ∩ Y` is the same for every `u ∈ X`.
    EqualOutNeighborhoods,
    /// `Y ⊆ N⁺(u)` for every `u ∈ X`.
    XDominatesY,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::NonadjacentXPairs,
        Claim::XNearlyComplete,
        Claim::NoUndirectedEdgeInY,
        Claim::XNeighborsPointIntoY,
        Claim::YIndependent,
        Claim::XYEdgesPointToY,
        Claim::NestedOutNeighborhoods,
        Claim::EqualOutNeighborhoods,
        Claim::XDominatesY,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Claim::NonadjacentXPairs => "nonadjacent-x-pairs",
            Claim::XNearlyComplete => "x-nearly-complete",
            Claim::NoUndirectedEdgeInY => "no-undirected-edge-in-y",
            Claim::XNeighborsPointIntoY => "x-neighbors-point-into-y",
            Claim::YIndependent => "y-independent",
            Claim::XYEdgesPointToY => "xy-edges-point-to-y",
            Claim::NestedOutNeighborhoods => "nested-out-neighborhoods",
            Claim::EqualOutNeighborhoods => "equal-out-neighborhoods",
            Claim::XDominatesY => "x-dominates-y",
        }
    }

    fn evaluate(&self, g: &Graph, ctx: &OrientationContext) -> Option<Vec<usize>> {
        let f = ctx.mixed();
        let x = ctx.x();
        let y = ctx.y();
        let pairs = |set: &[usize]| -> Vec<(usize, usize)> {
            set.iter()
                .enumerate()
                .flat_map(|(i, &a)| set[i + 1..].iter().map(move |&b| (a, b)))
                .collect()
        };
        let out_y = |u: usize| -> Vec<usize> { f.out_neighbors(u).filter(|&w| ctx.in_y(w)).collect() };

        match self {
            Claim::NonadjacentXPairs => {
                for (u, v) in pairs(&x) {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    if g.degree(u) != g.degree(v) {
                        return Some(vec![u, v]);
                    }
                    if let Some(&w) = x.iter().find(|&&w| w != u && w != v && g.degree(w) == g.degree(u)) {
                        return Some(vec![u, v, w]);
                    }
                }
                None
            }
            Claim::XNearlyComplete => x
                .iter()
                .find(|&&u| x.iter().filter(|&&w| g.has_edge(u, w)).count() + 2 < x.len())
                .map(|&u| vec![u]),
            Claim::NoUndirectedEdgeInY => pairs(&y)
                .into_iter()
                .find(|&(u, v)| f.has_edge(u, v))
                .map(|(u, v)| vec![u, v]),
            Claim::XNeighborsPointIntoY => {
                for &v in &y {
                    if !f.in_neighbors(v).all(|w| ctx.in_x(w)) {
                        continue;
                    }
                    if let Some(&u) = x.iter().find(|&&u| g.has_edge(u, v) && !f.has_arc(u, v)) {
                        return Some(vec![u, v]);
                    }
                }
                None
            }
            Claim::YIndependent => pairs(&y)
                .into_iter()
                .find(|&(u, v)| g.has_edge(u, v))
                .map(|(u, v)| vec![u, v]),
            Claim::XYEdgesPointToY => {
                for &u in &x {
                    if let Some(&v) = y.iter().find(|&&v| g.has_edge(u, v) && !f.has_arc(u, v)) {
                        return Some(vec![u, v]);
                    }
                }
                None
            }
            Claim::NestedOutNeighborhoods => {
                for &u in &x {
                    for &v in &x {
                        if u == v || g.degree(u) < g.degree(v) {
                            continue;
                        }
                        if let Some(w) = out_y(v).into_iter().find(|&w| !f.has_arc(u, w)) {
                            return Some(vec![u, v, w]);
                        }
                    }
                }
                None
            }
            Claim::EqualOutNeighborhoods => {
                for (u, v) in pairs(&x) {
                    let (nu, nv) = (out_y(u), out_y(v));
                    if nu != nv {
                        let w = nu
                            .iter()
                            .find(|w| !nv.contains(w))
                            .or_else(|| nv.iter().find(|w| !nu.contains(w)))
                            .copied()
                            .expect("distinct sets differ somewhere");
                        return Some(vec![u, v, w]);
                    }
                }
                None
            }
            Claim::XDominatesY => {
                for &u in &x {
                    if let Some(&w) = y.iter().find(|&&w| !f.has_arc(u, w)) {
                        return Some(vec![u, w]);
                    }
                }
                None
            }
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub claim: Claim,
    /// Witnessing vertices when the predicate fails.
    pub counterexample: Option<Vec<usize>>,
}

impl ClaimOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub outcomes: Vec<ClaimOutcome>,
}

impl ClaimReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(ClaimOutcome::passed)
    }

    pub fn outcome(&self, claim: Claim) -> &ClaimOutcome {
        self.outcomes
            .iter()
            .find(|o| o.claim == claim)
            .expect("report covers every claim")
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }
}

/// Evaluates every predicate on the degree orientation of `g`.
pub fn check_claims(g: &Graph) -> ClaimReport {
    let ctx = OrientationContext::orient(g);
    ClaimReport {
        outcomes: Claim::ALL
            .iter()
            .map(|&claim| ClaimOutcome {
                claim,
                counterexample: claim.evaluate(g, &ctx),
            })
            .collect(),
    }
}
