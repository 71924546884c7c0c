//! cM₂-monotone graph rewrites and a deterministic hill climber.
//!
//! All preconditions are read off the degree orientation of the graph being
//! rewritten:
//!
//! * **A** `(u, v)`: `u, v ∈ X` and `uv` is a non-edge. Adding `uv` never
//!   lowers cM₂; it keeps it equal only if `d(u) = d(v)` and both endpoints
//!   are balanced (`d⁺ = d⁻`).
//! * **B** `(u, v, w)`: `v ∈ Y`, arcs `u → v → w`, `uw` a non-edge. Replacing
//!   the directed 2-path by the edge `uw` strictly raises cM₂.
//! * **C** `(u, v, w)`: `u, v ∈ X`, `d(u) ≥ d(v)`, `d⁺(u) ≥ d⁺(v)`,
//!   `d⁻(u) ≤ d⁻(v)`, `w ∈ N⁺(v) ∩ Y`, and `uw` a non-edge. Moving the
//!   arc tail from `v` to `u` strictly raises cM₂.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{cm2, IndexValue};
use crate::orientation::OrientationContext;

/// A rewrite. Variant order is the scan order: B, then C, then A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    B { u: usize, v: usize, w: usize },
    C { u: usize, v: usize, w: usize },
    A { u: usize, v: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    A,
    B,
    C,
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::A { .. } => MoveKind::A,
            Move::B { .. } => MoveKind::B,
            Move::C { .. } => MoveKind::C,
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            Move::A { u, v } => vec![u, v],
            Move::B { u, v, w } | Move::C { u, v, w } => vec![u, v, w],
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::A => "A",
            MoveKind::B => "B",
            MoveKind::C => "C",
        })
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind())?;
        for x in self.vertices() {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

fn illegal(mv: Move, reason: &'static str) -> Error {
    Error::IllegalMove {
        mv: mv.to_string(),
        reason,
    }
}

/// Checks the preconditions of `mv` against `ctx`, the degree orientation of `g`.
pub fn check_move(g: &Graph, ctx: &OrientationContext, mv: Move) -> Result<()> {
    for x in mv.vertices() {
        g.check_vertex(x)?;
    }
    let f = ctx.mixed();
    match mv {
        Move::A { u, v } => {
            if u == v {
                return Err(illegal(mv, "endpoints coincide"));
            }
            if !ctx.in_x(u) || !ctx.in_x(v) {
                return Err(illegal(mv, "both endpoints must lie in X"));
            }
            if g.has_edge(u, v) {
                return Err(illegal(mv, "edge already present"));
            }
        }
        Move::B { u, v, w } => {
            if !ctx.in_y(v) {
                return Err(illegal(mv, "middle vertex must lie in Y"));
            }
            if !f.has_arc(u, v) || !f.has_arc(v, w) {
                return Err(illegal(mv, "needs arcs u->v and v->w"));
            }
            if g.has_edge(u, w) {
                return Err(illegal(mv, "edge uw already present"));
            }
        }
        Move::C { u, v, w } => {
            if u == v {
                return Err(illegal(mv, "u and v coincide"));
            }
            if !ctx.in_x(u) || !ctx.in_x(v) {
                return Err(illegal(mv, "u and v must lie in X"));
            }
            let (du, dv) = (ctx.degrees(u), ctx.degrees(v));
            if du.total < dv.total || du.out < dv.out || du.inn > dv.inn {
                return Err(illegal(mv, "u must dominate v in degree, out-degree and in-degree"));
            }
            if !ctx.in_y(w) || !f.has_arc(v, w) {
                return Err(illegal(mv, "w must be an out-neighbor of v in Y"));
            }
            if g.has_edge(u, w) {
                return Err(illegal(mv, "edge uw already present"));
            }
        }
    }
    Ok(())
}

/// Whether adding `uv` can leave cM₂ unchanged: `d(u) = d(v)` and both
/// endpoints balanced.
pub fn a_plateau_conditions(ctx: &OrientationContext, u: usize, v: usize) -> bool {
    let (du, dv) = (ctx.degrees(u), ctx.degrees(v));
    du.total == dv.total && du.out == du.inn && dv.out == dv.inn
}

fn rewrite(g: &Graph, mv: Move) -> Graph {
    let mut h = g.clone();
    match mv {
        Move::A { u, v } => h.put(u, v, true),
        Move::B { u, v, w } => {
            h.put(u, v, false);
            h.put(v, w, false);
            h.put(u, w, true);
        }
        Move::C { u, v, w } => {
            h.put(v, w, false);
            h.put(u, w, true);
        }
    }
    h
}

/// Applies any move after validating it against the orientation of `g`.
pub fn apply_move(g: &Graph, mv: Move) -> Result<Graph> {
    let ctx = OrientationContext::orient(g);
    check_move(g, &ctx, mv)?;
    Ok(rewrite(g, mv))
}

/// `G + uv` for `u, v ∈ X`.
pub fn apply_a(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    apply_move(g, Move::A { u, v })
}

/// `G − uv − vw + uw` for a directed 2-path `u → v → w` through Y.
pub fn apply_b(g: &Graph, u: usize, v: usize, w: usize) -> Result<Graph> {
    apply_move(g, Move::B { u, v, w })
}

/// `G − vw + uw`.
pub fn apply_c(g: &Graph, u: usize, v: usize, w: usize) -> Result<Graph> {
    apply_move(g, Move::C { u, v, w })
}

/// Every applicable move, sorted B < C < A and lexicographically within a kind.
pub fn enumerate_moves(g: &Graph) -> Vec<Move> {
    let ctx = OrientationContext::orient(g);
    enumerate_with(g, &ctx)
}

pub fn enumerate_with(g: &Graph, ctx: &OrientationContext) -> Vec<Move> {
    let n = g.order();
    let f = ctx.mixed();
    let x = ctx.x();
    let mut moves = Vec::new();

    for v in ctx.y() {
        for u in f.in_neighbors(v) {
            for w in f.out_neighbors(v) {
                if !g.has_edge(u, w) {
                    moves.push(Move::B { u, v, w });
                }
            }
        }
    }

    for &u in &x {
        let du = ctx.degrees(u);
        for &v in &x {
            let dv = ctx.degrees(v);
            if u == v || du.total < dv.total || du.out < dv.out || du.inn > dv.inn {
                continue;
            }
            for w in f.out_neighbors(v) {
                if ctx.in_y(w) && !g.has_edge(u, w) {
                    moves.push(Move::C { u, v, w });
                }
            }
        }
    }

    for (i, &u) in x.iter().enumerate() {
        for &v in &x[i + 1..] {
            if !g.has_edge(u, v) {
                moves.push(Move::A { u, v });
            }
        }
    }

    debug_assert!(moves.iter().all(|m| m.vertices().iter().all(|&x| x < n)));
    moves.sort_unstable();
    moves
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Policy {
    /// Take the first strictly improving move in scan order.
    #[default]
    FirstImprovement,
    /// Take the move with the largest gain; ties go to the earliest in scan order.
    BestImprovement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClimbConfig {
    pub policy: Policy,
    /// When no strict move exists, allow A-moves that keep cM₂ equal.
    pub allow_plateau_a: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub mv: Move,
    pub before: IndexValue,
    pub after: IndexValue,
}

/// Ordered record of applied moves; replaying it from `initial` must land on
/// `final_graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteTrace {
    pub initial: Graph,
    pub steps: Vec<TraceStep>,
    pub final_graph: Graph,
}

impl RewriteTrace {
    pub fn is_strictly_increasing(&self) -> bool {
        self.steps.iter().all(|s| s.after > s.before) && self.steps.windows(2).all(|w| w[0].after == w[1].before)
    }

    pub fn gain(&self) -> i64 {
        match (self.steps.first(), self.steps.last()) {
            (Some(first), Some(last)) => last.after.get() - first.before.get(),
            _ => 0,
        }
    }

    /// Re-applies every step with full precondition checks and verifies the
    /// recorded values and the final graph.
    pub fn replay(&self) -> Result<Graph> {
        let mut g = self.initial.clone();
        for (i, step) in self.steps.iter().enumerate() {
            let before = cm2(&g);
            g = apply_move(&g, step.mv)?;
            let after = cm2(&g);
            if before != step.before || after != step.after {
                return Err(Error::Parse {
                    line: i + 2,
                    msg: format!(
                        "recorded values {} -> {} but replay gives {before} -> {after}",
                        step.before, step.after
                    ),
                });
            }
        }
        if g != self.final_graph {
            return Err(Error::Parse {
                line: self.steps.len() + 1,
                msg: "replay does not reach the recorded final graph".into(),
            });
        }
        Ok(g)
    }
}

/// Hill-climbs from `g` with the rewrite moves until no move qualifies.
///
/// Without plateau moves every step raises cM₂ by at least one, so the run
/// is bounded by the index's range. Plateau A-moves never revisit a graph.
pub fn climb(g: &Graph, config: &ClimbConfig) -> RewriteTrace {
    let mut current = g.clone();
    let mut value = cm2(&current);
    let mut steps = Vec::new();
    let mut visited: HashSet<Graph> = HashSet::new();
    if config.allow_plateau_a {
        visited.insert(current.clone());
    }

    loop {
        let ctx = OrientationContext::orient(&current);
        let moves = enumerate_with(&current, &ctx);
        let mut chosen: Option<(Move, Graph, IndexValue)> = None;

        for &mv in &moves {
            let next = rewrite(&current, mv);
            let next_value = cm2(&next);
            if next_value <= value {
                continue;
            }
            let better = match &chosen {
                None => true,
                Some((_, _, best)) => config.policy == Policy::BestImprovement && next_value > *best,
            };
            if better {
                chosen = Some((mv, next, next_value));
                if config.policy == Policy::FirstImprovement {
                    break;
                }
            }
        }

        if chosen.is_none() && config.allow_plateau_a {
            chosen = moves
                .iter()
                .filter(|mv| mv.kind() == MoveKind::A)
                .map(|&mv| (mv, rewrite(&current, mv)))
                .find(|(_, next)| cm2(next) == value && !visited.contains(next))
                .map(|(mv, next)| (mv, next, value));
        }

        let Some((mv, next, next_value)) = chosen else {
            break;
        };
        steps.push(TraceStep {
            mv,
            before: value,
            after: next_value,
        });
        if config.allow_plateau_a {
            visited.insert(next.clone());
        }
        current = next;
        value = next_value;
    }

    RewriteTrace {
        initial: g.clone(),
        steps,
        final_graph: current,
    }
}
