//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is a symmetric bit matrix, so membership tests are a single
//! word lookup. Graphs behave like values: the `with_*` constructors return
//! new graphs and leave their input untouched.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};

/// Largest supported order. Index values stay below `n^4`, which fits in
/// an `i64` with room to spare up to here.
pub const MAX_ORDER: usize = 1 << 15;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BitMatrix,
}

/// Certificate that a graph is `K_m ∨ K̄_{n-m}` under its current labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitWitness {
    pub m: usize,
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n` exceeds [`MAX_ORDER`].
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds MAX_ORDER");
        Self {
            adj: BitMatrix::new(n),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.put(u, v, true);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.set_edge(u, v, true)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.n()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order()).map(|u| self.adj.row_count(u)).sum::<usize>() / 2
    }

    /// Whether `{u, v}` is an edge. Out-of-range or equal endpoints are
    /// simply not adjacent.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj.get(u, v)
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) -> Result<()> {
        self.check_pair(u, v)?;
        self.put(u, v, present);
        Ok(())
    }

    /// Copy of `self` with `{u, v}` present or absent.
    pub fn with_edge(&self, u: usize, v: usize, present: bool) -> Result<Self> {
        let mut g = self.clone();
        g.set_edge(u, v, present)?;
        Ok(g)
    }

    /// # Panics
    /// If `u` is out of range; see [`Graph::try_degree`].
    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj.row_count(u)
    }

    pub fn try_degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.degree(u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|u| self.degree(u)).collect()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter_row(u)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.adj.iter_row(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Self {
        let n = self.order();
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj.get(u, v) {
                    g.put(u, v, true);
                }
            }
        }
        g
    }

    /// `self ∨ other`: vertices of `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Self {
        let (a, b) = (self.order(), other.order());
        let mut g = Self::new(a + b);
        for (u, v) in self.edges() {
            g.put(u, v, true);
        }
        for (u, v) in other.edges() {
            g.put(a + u, a + v, true);
        }
        for u in 0..a {
            for v in 0..b {
                g.put(u, a + v, true);
            }
        }
        g
    }

    /// `K_m ∨ K̄_{n-m}` with the clique on `0..m`.
    pub fn complete_split(m: usize, n: usize) -> Result<Self> {
        if m < 1 || m >= n {
            return Err(Error::CliqueSizeOutOfRange { m, n });
        }
        Ok(Self::complete(m).join(&Self::new(n - m)))
    }

    /// Recognizes `K_m ∨ K̄_{n-m}` under the current labeling.
    ///
    /// The clique part is the set of universal vertices; every other vertex
    /// must then have degree exactly `m`, which forces it to see the clique
    /// and nothing else. `K_n` is read as `K_{n-1} ∨ K̄_1` with the last
    /// vertex in the independent part.
    pub fn is_complete_split(&self) -> Option<SplitWitness> {
        let n = self.order();
        if n < 2 {
            return None;
        }
        let degrees = self.degrees();
        let (clique, independent): (Vec<usize>, Vec<usize>) = (0..n).partition(|&u| degrees[u] == n - 1);
        let m = clique.len();
        if m == 0 {
            return None;
        }
        if m == n {
            return Some(SplitWitness {
                m: n - 1,
                clique: (0..n - 1).collect(),
                independent: vec![n - 1],
            });
        }
        if independent.iter().any(|&u| degrees[u] != m) {
            return None;
        }
        Some(SplitWitness { m, clique, independent })
    }

    /// Relabels vertex `u` as `sigma[u]`.
    pub fn permute(&self, sigma: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = vec![false; n];
        if sigma.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        for &s in sigma {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        let mut g = Self::new(n);
        for (u, v) in self.edges() {
            g.put(sigma[u], sigma[v], true);
        }
        Ok(g)
    }

    /// Erdős–Rényi `G(n, p)` driven by a seeded ChaCha8 stream.
    pub fn random(n: usize, p: f64, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(n, p, &mut rng)
    }

    pub fn random_with<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    g.put(u, v, true);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn put(&mut self, u: usize, v: usize, present: bool) {
        self.adj.assign(u, v, present);
        self.adj.assign(v, u, present);
    }

    pub(crate) fn check_vertex(&self, u: usize) -> Result<()> {
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

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn new_graph_is_edgeless() {
        assert_eq!(Graph::new(0).order(), 0);
        assert_eq!(Graph::new(0).edge_count(), 0);
        let g = Graph::new(3);
        assert_eq!(g.degrees(), vec![0, 0, 0]);
    }

    #[test]
    fn with_edge_toggles_and_is_idempotent() {
        let k2 = Graph::new(2).with_edge(0, 1, true).unwrap();
        assert_eq!(k2, Graph::complete(2));
        assert_eq!(k2.with_edge(0, 1, false).unwrap(), Graph::new(2));
        assert_eq!(k2.with_edge(1, 0, true).unwrap(), k2);
        // input untouched
        let base = Graph::new(2);
        let _ = base.with_edge(0, 1, true).unwrap();
        assert_eq!(base.edge_count(), 0);
    }

    #[test]
    fn with_edge_rejects_loops_and_range() {
        let g = Graph::new(3);
        assert_eq!(g.with_edge(1, 1, true), Err(Error::SelfLoop(1)));
        assert_eq!(
            g.with_edge(0, 3, true),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn degrees_of_small_families() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degree(0), 3);
        assert!((0..5).all(|u| cycle(5).degree(u) == 2));
        assert_eq!(Graph::new(2).degree(1), 0);
        assert!(Graph::new(2).try_degree(2).is_err());
        assert_eq!(star.degrees().iter().sum::<usize>(), 2 * star.edge_count());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(5).complement(), Graph::new(5));
        assert_eq!(Graph::new(3).complement(), Graph::complete(3));
        // the 5-cycle complement is the pentagram 0-2-4-1-3-0
        let c5 = cycle(5);
        let pentagram = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5.complement(), pentagram);
        // relabel the pentagram along its own cycle to get C5 back
        let sigma = [0, 3, 1, 4, 2];
        assert_eq!(pentagram.permute(&sigma).unwrap(), c5);
    }

    #[test]
    fn join_examples() {
        let star = Graph::complete(1).join(&Graph::new(3));
        assert_eq!(star, Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap());
        assert_eq!(Graph::new(1).join(&Graph::new(1)), Graph::complete(2));
        let g = Graph::complete(2).join(&Graph::new(2));
        assert_eq!(g.degrees(), vec![3, 3, 2, 2]);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn complete_split_examples() {
        assert_eq!(
            Graph::complete_split(1, 4).unwrap(),
            Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
        );
        for n in 2..9 {
            assert_eq!(Graph::complete_split(n - 1, n).unwrap(), Graph::complete(n));
        }
        assert_eq!(Graph::complete_split(2, 5).unwrap().degrees(), vec![4, 4, 2, 2, 2]);
        assert!(Graph::complete_split(0, 4).is_err());
        assert!(Graph::complete_split(4, 4).is_err());
    }

    #[test]
    fn recognizer_examples() {
        let star = Graph::complete_split(1, 4).unwrap();
        assert_eq!(star.is_complete_split().unwrap().m, 1);
        assert!(cycle(5).is_complete_split().is_none());
        let w = Graph::complete(4).is_complete_split().unwrap();
        assert_eq!(w.m, 3);
        assert_eq!(w.clique, vec![0, 1, 2]);
        assert_eq!(w.independent, vec![3]);
        assert!(Graph::new(1).is_complete_split().is_none());
        assert!(Graph::new(0).is_complete_split().is_none());
        assert!(Graph::new(2).is_complete_split().is_none());
    }

    #[test]
    fn recognizer_rejects_near_misses() {
        // universal vertex present but an extra edge among the low vertices
        let g = Graph::complete_split(1, 5).unwrap().with_edge(1, 2, true).unwrap();
        assert!(g.is_complete_split().is_none());
        // K_{2,2} has no universal vertex
        let k22 = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(k22.is_complete_split().is_none());
    }

    #[test]
    fn recognizer_inverts_constructor() {
        for n in 2..=12 {
            for m in 1..n {
                let w = Graph::complete_split(m, n).unwrap().is_complete_split().unwrap();
                assert_eq!(w.m, m, "m={m} n={n}");
                assert_eq!(w.clique.len() + w.independent.len(), n);
            }
        }
    }

    #[test]
    fn permute_checks_bijection() {
        let g = cycle(4);
        assert_eq!(g.permute(&[0, 1, 2, 3]).unwrap(), g);
        assert_eq!(g.permute(&[0, 0, 1, 2]), Err(Error::NotAPermutation(4)));
        assert_eq!(g.permute(&[0, 1, 2]), Err(Error::NotAPermutation(4)));
        assert_eq!(g.permute(&[0, 1, 2, 4]), Err(Error::NotAPermutation(4)));
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        assert_eq!(Graph::random(7, 0.0, 1).unwrap(), Graph::new(7));
        assert_eq!(Graph::random(7, 1.0, 1).unwrap(), Graph::complete(7));
        assert_eq!(Graph::random(20, 0.4, 99).unwrap(), Graph::random(20, 0.4, 99).unwrap());
        assert!(matches!(Graph::random(3, 1.5, 0), Err(Error::InvalidProbability(_))));
        assert!(matches!(Graph::random(3, -0.1, 0), Err(Error::InvalidProbability(_))));
    }

    #[test]
    fn join_degree_law() {
        let g = Graph::random(6, 0.5, 3).unwrap();
        let h = Graph::random(4, 0.3, 4).unwrap();
        let j = g.join(&h);
        for u in 0..6 {
            assert_eq!(j.degree(u), g.degree(u) + 4);
        }
        for u in 0..4 {
            assert_eq!(j.degree(6 + u), h.degree(u) + 6);
        }
        assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + 24);
    }

    #[test]
    fn permute_preserves_degree_multiset() {
        let g = Graph::random(9, 0.5, 11).unwrap();
        let sigma = [3, 8, 1, 0, 7, 2, 6, 5, 4];
        let h = g.permute(&sigma).unwrap();
        assert_eq!(sorted_degrees(&g), sorted_degrees(&h));
        assert_eq!(g.edge_count(), h.edge_count());
        for (u, v) in g.edges() {
            assert!(h.has_edge(sigma[u], sigma[v]));
        }
    }
}
