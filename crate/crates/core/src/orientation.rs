//! Mixed graphs and the degree orientation of a simple graph.
//!
//! The degree orientation turns every edge `uv` with `d(u) > d(v)` into the
//! arc `u → v` and keeps equal-degree edges undirected. Vertices whose
//! out-degree is at least their in-degree form the set X, the rest form Y.

use std::collections::HashMap;
use std::fmt;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A simple mixed graph: an undirected edge set and an arc set on the same
/// vertices, with every pair used at most once.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    undirected: BitMatrix,
    out: BitMatrix,
    inn: BitMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MixedDegrees {
    pub out: usize,
    pub inn: usize,
    pub total: usize,
}

impl MixedDegrees {
    /// `d⁺ − d⁻`
    #[inline]
    pub fn balance(&self) -> i64 {
        self.out as i64 - self.inn as i64
    }
}

impl MixedGraph {
    pub fn new(n: usize) -> Self {
        Self {
            undirected: BitMatrix::new(n),
            out: BitMatrix::new(n),
            inn: BitMatrix::new(n),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.out.n()
    }

    /// Whether `u` and `v` are joined by an edge or an arc in either direction.
    #[inline]
    pub fn is_occupied(&self, u: usize, v: usize) -> bool {
        self.undirected.get(u, v) || self.out.get(u, v) || self.out.get(v, u)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.undirected.get(u, v)
    }

    #[inline]
    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        tail < self.order() && head < self.order() && self.out.get(tail, head)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if self.is_occupied(u, v) {
            return Err(Error::PairOccupied { u, v });
        }
        self.undirected.assign(u, v, true);
        self.undirected.assign(v, u, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if !self.undirected.get(u, v) {
            return Err(Error::PairAbsent { u, v });
        }
        self.undirected.assign(u, v, false);
        self.undirected.assign(v, u, false);
        Ok(())
    }

    pub fn add_arc(&mut self, tail: usize, head: usize) -> Result<()> {
        self.check_pair(tail, head)?;
        if self.is_occupied(tail, head) {
            return Err(Error::PairOccupied { u: tail, v: head });
        }
        self.out.assign(tail, head, true);
        self.inn.assign(head, tail, true);
        Ok(())
    }

    pub fn remove_arc(&mut self, tail: usize, head: usize) -> Result<()> {
        self.check_pair(tail, head)?;
        if !self.out.get(tail, head) {
            return Err(Error::PairAbsent { u: tail, v: head });
        }
        self.out.assign(tail, head, false);
        self.inn.assign(head, tail, false);
        Ok(())
    }

    /// Undirected edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.undirected.iter_row(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Arcs as `(tail, head)`, ordered by tail then head.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.out.iter_row(u).map(move |v| (u, v)))
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.out.iter_row(u)
    }

    pub fn in_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.inn.iter_row(u)
    }

    pub fn undirected_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.undirected.iter_row(u)
    }

    pub fn arc_count(&self) -> usize {
        (0..self.order()).map(|u| self.out.row_count(u)).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order()).map(|u| self.undirected.row_count(u)).sum::<usize>() / 2
    }

    /// # Panics
    /// If `u` is out of range; see [`MixedGraph::mixed_degrees`].
    #[inline]
    pub fn degrees(&self, u: usize) -> MixedDegrees {
        let out = self.out.row_count(u);
        let inn = self.inn.row_count(u);
        MixedDegrees {
            out,
            inn,
            total: out + inn + self.undirected.row_count(u),
        }
    }

    pub fn mixed_degrees(&self, u: usize) -> Result<MixedDegrees> {
        self.check_vertex(u)?;
        Ok(self.degrees(u))
    }

    /// Forgets all directions.
    pub fn underlying(&self) -> Graph {
        let mut g = Graph::new(self.order());
        for (u, v) in self.edges().chain(self.arcs()) {
            g.put(u, v, true);
        }
        g
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.order() {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                order: self.order(),
            });
        }
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MixedGraph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

/// How to treat one edge `{lo, hi}` (with `lo < hi`) in a partial orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeTag {
    /// arc `lo → hi`
    Forward,
    /// arc `hi → lo`
    Backward,
    Undirected,
}

/// Orients the edges of `g` as prescribed by `choice`, keyed by `(lo, hi)`.
pub fn partial_orientation(g: &Graph, choice: &HashMap<(usize, usize), EdgeTag>) -> Result<MixedGraph> {
    for &(u, v) in choice.keys() {
        if u >= v || !g.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
    }
    let mut f = MixedGraph::new(g.order());
    for (u, v) in g.edges() {
        match choice.get(&(u, v)) {
            Some(EdgeTag::Forward) => f.add_arc(u, v)?,
            Some(EdgeTag::Backward) => f.add_arc(v, u)?,
            Some(EdgeTag::Undirected) => f.add_edge(u, v)?,
            None => return Err(Error::MissingOrientation { u, v }),
        }
    }
    Ok(f)
}

/// A mixed graph together with its per-vertex degrees and the X/Y split.
/// Immutable; rebuild with [`OrientationContext::from_mixed`] after editing
/// the mixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationContext {
    mixed: MixedGraph,
    degrees: Vec<MixedDegrees>,
}

impl OrientationContext {
    /// Degree orientation of `g`.
    pub fn orient(g: &Graph) -> Self {
        let deg = g.degrees();
        let mut f = MixedGraph::new(g.order());
        for (u, v) in g.edges() {
            if deg[u] > deg[v] {
                f.out.assign(u, v, true);
                f.inn.assign(v, u, true);
            } else if deg[v] > deg[u] {
                f.out.assign(v, u, true);
                f.inn.assign(u, v, true);
            } else {
                f.undirected.assign(u, v, true);
                f.undirected.assign(v, u, true);
            }
        }
        Self::from_mixed(f)
    }

    pub fn from_mixed(mixed: MixedGraph) -> Self {
        let degrees = (0..mixed.order()).map(|u| mixed.degrees(u)).collect();
        Self { mixed, degrees }
    }

    #[inline]
    pub fn mixed(&self) -> &MixedGraph {
        &self.mixed
    }

    pub fn into_mixed(self) -> MixedGraph {
        self.mixed
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.degrees.len()
    }

    #[inline]
    pub fn degrees(&self, u: usize) -> MixedDegrees {
        self.degrees[u]
    }

    #[inline]
    pub fn out_degree(&self, u: usize) -> usize {
        self.degrees[u].out
    }

    #[inline]
    pub fn in_degree(&self, u: usize) -> usize {
        self.degrees[u].inn
    }

    #[inline]
    pub fn total_degree(&self, u: usize) -> usize {
        self.degrees[u].total
    }

    /// `d⁺(u) ≥ d⁻(u)`; isolated vertices land here too.
    #[inline]
    pub fn in_x(&self, u: usize) -> bool {
        self.degrees[u].out >= self.degrees[u].inn
    }

    #[inline]
    pub fn in_y(&self, u: usize) -> bool {
        !self.in_x(u)
    }

    pub fn x(&self) -> Vec<usize> {
        (0..self.order()).filter(|&u| self.in_x(u)).collect()
    }

    pub fn y(&self) -> Vec<usize> {
        (0..self.order()).filter(|&u| self.in_y(u)).collect()
    }
}
