//! Exact evaluation of cM₂ and M₂.
//!
//! cM₂ has three equal readings on the degree orientation of a graph: the
//! edge sum of `|d(u)² − d(v)²|`, the signed arc sum of `d(tail)² − d(head)²`,
//! and the vertex sum of `(d⁺ − d⁻)·d²`. For any other partial orientation
//! the arc and vertex sums still agree with each other and bound cM₂ from
//! below.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::orientation::MixedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexValue(pub i64);

impl IndexValue {
    #[inline]
    pub fn get(self) -> i64 {
        self.0
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[inline]
fn sq(d: usize) -> i64 {
    (d as i64) * (d as i64)
}

/// Σ over edges of `|d(u)² − d(v)²|`.
pub fn cm2(g: &Graph) -> IndexValue {
    let d = g.degrees();
    IndexValue(g.edges().map(|(u, v)| (sq(d[u]) - sq(d[v])).abs()).sum())
}

/// Σ over edges of `d(u)·d(v)`.
pub fn m2(g: &Graph) -> IndexValue {
    let d = g.degrees();
    IndexValue(g.edges().map(|(u, v)| (d[u] * d[v]) as i64).sum())
}

/// Σ over arcs `u → v` of `d(u)² − d(v)²`, with total degrees taken in `f`.
pub fn cm2_arc_form(f: &MixedGraph) -> IndexValue {
    let total: Vec<usize> = (0..f.order()).map(|u| f.degrees(u).total).collect();
    IndexValue(f.arcs().map(|(u, v)| sq(total[u]) - sq(total[v])).sum())
}

/// Σ over vertices of `(d⁺(v) − d⁻(v))·d(v)²`.
pub fn cm2_vertex_form(f: &MixedGraph) -> IndexValue {
    IndexValue(
        (0..f.order())
            .map(|u| {
                let d = f.degrees(u);
                d.balance() * sq(d.total)
            })
            .sum(),
    )
}

/// cM₂ of `K_m ∨ K̄_{n-m}`: `m(n−m)((n−1)² − m²)`.
///
/// Each of the `m(n−m)` cross edges joins a degree `n−1` vertex to a degree
/// `m` vertex; clique edges contribute nothing.
pub fn split_closed_form(m: usize, n: usize) -> Result<IndexValue> {
    check_order(n, 2)?;
    if m < 1 || m >= n {
        return Err(Error::CliqueSizeOutOfRange { m, n });
    }
    let (m, n) = (m as i64, n as i64);
    Ok(IndexValue(m * (n - m) * ((n - 1) * (n - 1) - m * m)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalSplit {
    pub m_star: usize,
    pub value: IndexValue,
    /// Every maximizing `m`, ascending; `ties[0] == m_star`.
    pub ties: Vec<usize>,
}

/// Best clique size for a complete split graph of order `n`, by linear scan.
pub fn optimal_m(n: usize) -> Result<OptimalSplit> {
    check_order(n, 2)?;
    let mut best = IndexValue(i64::MIN);
    let mut ties = Vec::new();
    for m in 1..n {
        let value = split_closed_form(m, n)?;
        if value > best {
            best = value;
            ties.clear();
        }
        if value == best {
            ties.push(m);
        }
    }
    Ok(OptimalSplit {
        m_star: ties[0],
        value: best,
        ties,
    })
}

fn check_order(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange { n, min, max: MAX_ORDER });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orientation::OrientationContext;

    /// Definition-level evaluation from a raw edge list, independent of
    /// `Graph`'s degree bookkeeping.
    fn cm2_oracle(n: usize, edges: &[(usize, usize)]) -> i64 {
        let mut d = vec![0i64; n];
        for &(u, v) in edges {
            d[u] += 1;
            d[v] += 1;
        }
        edges.iter().map(|&(u, v)| (d[u] * d[u] - d[v] * d[v]).abs()).sum()
    }

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn regular_graphs_have_zero_cm2() {
        let c7 = Graph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        for g in [c7, Graph::complete(6), Graph::new(5), Graph::new(0)] {
            assert_eq!(cm2(&g), IndexValue(0));
        }
    }

    #[test]
    fn cm2_small_examples() {
        let p4 = [(0, 1), (1, 2), (2, 3)];
        let star = [(0, 1), (0, 2), (0, 3)];
        assert_eq!(cm2_oracle(4, &p4), 6);
        assert_eq!(cm2_oracle(4, &star), 24);
        assert_eq!(cm2(&graph(4, &p4)), IndexValue(6));
        assert_eq!(cm2(&graph(4, &star)), IndexValue(24));
        assert_eq!(split_closed_form(1, 4).unwrap(), IndexValue(24));
    }

    #[test]
    fn m2_small_examples() {
        assert_eq!(m2(&Graph::new(6)), IndexValue(0));
        assert_eq!(m2(&graph(3, &[(0, 1), (1, 2)])), IndexValue(4));
        assert_eq!(m2(&Graph::complete(3)), IndexValue(12));
    }

    #[test]
    fn arc_form_examples() {
        assert_eq!(cm2_arc_form(&MixedGraph::new(4)), IndexValue(0));
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(cm2_arc_form(OrientationContext::orient(&p4).mixed()), IndexValue(6));

        let star = Graph::complete_split(1, 4).unwrap();
        let f = OrientationContext::orient(&star).into_mixed();
        let mut reversed = MixedGraph::new(4);
        for (u, v) in f.arcs() {
            reversed.add_arc(v, u).unwrap();
        }
        assert_eq!(cm2_arc_form(&reversed), IndexValue(-24));
        assert_eq!(cm2_vertex_form(&reversed), IndexValue(-24));
    }

    #[test]
    fn vertex_form_examples() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(cm2_vertex_form(OrientationContext::orient(&c5).mixed()), IndexValue(0));
        let star = Graph::complete_split(1, 4).unwrap();
        assert_eq!(cm2_vertex_form(OrientationContext::orient(&star).mixed()), IndexValue(24));
    }

    #[test]
    fn closed_form_examples() {
        for n in 2..20 {
            assert_eq!(split_closed_form(n - 1, n).unwrap(), IndexValue(0));
        }
        assert_eq!(split_closed_form(2, 5).unwrap(), IndexValue(72));
        assert_eq!(split_closed_form(3, 7).unwrap(), IndexValue(324));
        assert_eq!(
            cm2(&Graph::complete_split(2, 5).unwrap()),
            split_closed_form(2, 5).unwrap()
        );
        assert!(split_closed_form(0, 5).is_err());
        assert!(split_closed_form(5, 5).is_err());
        assert!(split_closed_form(1, MAX_ORDER + 1).is_err());
    }

    #[test]
    fn optimal_m_examples() {
        // frozen from a brute-force scan over m
        let table = [
            (2, 1, 0),
            (3, 1, 6),
            (4, 1, 24),
            (5, 2, 72),
            (6, 2, 168),
            (7, 3, 324),
            (8, 3, 600),
            (9, 3, 990),
            (10, 4, 1560),
        ];
        for (n, m, v) in table {
            let opt = optimal_m(n).unwrap();
            assert_eq!((opt.m_star, opt.value), (m, IndexValue(v)), "n={n}");
            assert_eq!(opt.ties, vec![m]);
        }
        assert_eq!(split_closed_form(2, 4).unwrap(), IndexValue(20));
        assert!(optimal_m(1).is_err());
        assert!(optimal_m(0).is_err());
    }

    #[test]
    fn optimal_m_is_a_true_argmax() {
        for n in 2..=200 {
            let opt = optimal_m(n).unwrap();
            for m in 1..n {
                let v = split_closed_form(m, n).unwrap();
                assert!(v <= opt.value);
                assert_eq!(v == opt.value, opt.ties.contains(&m));
            }
        }
    }

    #[test]
    fn no_overflow_at_max_order() {
        let n = MAX_ORDER;
        let opt = optimal_m(n).unwrap();
        assert!(opt.value.get() > 0);
        // |E|·(n−1)² bound
        let bound = (n as i128 * (n as i128 - 1) / 2) * (n as i128 - 1).pow(2);
        assert!((opt.value.get() as i128) < bound);
    }

    #[test]
    fn cm2_matches_oracle_on_random_graphs() {
        for seed in 0..300u64 {
            let g = Graph::random(1 + (seed % 16) as usize, 0.5, seed).unwrap();
            let edges: Vec<_> = g.edges().collect();
            assert_eq!(cm2(&g).get(), cm2_oracle(g.order(), &edges));
        }
    }
}
