//! Labeled enumeration of all graphs of order `n ≤ 8`.
//!
//! Edge subsets are visited in reflected Gray-code order, so consecutive
//! masks differ in one pair and cM₂ is updated from the two endpoints'
//! incident edges instead of being recomputed. The mask index space is cut
//! into contiguous power-of-two chunks; every chunk yields a private
//! [`Partial`] and partials merge associatively and commutatively, so the
//! result does not depend on how chunks were scheduled.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;
use std::time::{Duration, Instant};

use super::claims::check_claims;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{cm2, optimal_m, IndexValue};
use crate::io::graph6;

pub const MAX_SCAN_ORDER: usize = 8;

/// Every this many masks the incremental value is checked against a full
/// recomputation.
const VALIDATE_EVERY: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Maximum number of witness graph6 strings kept; counts stay exact.
    pub sample_cap: usize,
    pub jobs: usize,
    /// Order 8 (2²⁸ graphs) is refused unless this is set.
    pub allow_n8: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            sample_cap: 100,
            jobs: 1,
            allow_n8: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub n: usize,
    pub global_max: IndexValue,
    pub closed_form_max: IndexValue,
    pub optimal_ms: Vec<usize>,
    pub maximizer_count: u64,
    pub non_split_maximizers: u64,
    /// Maximizers on which at least one structural predicate fails.
    pub claim_failures: u64,
    /// Graphs whose cM₂ exceeds the closed-form maximum.
    pub above_closed_form: u64,
    /// Lexicographically smallest maximizers, as graph6.
    pub sample_witnesses: Vec<String>,
    /// Smallest non-split maximizer, as graph6.
    pub first_counterexample: Option<String>,
    pub graphs_scanned: u64,
    pub elapsed: Duration,
}

impl ExtremalReport {
    /// The maximum equals the closed form and every maximizer is complete split.
    pub fn verified(&self) -> bool {
        self.global_max == self.closed_form_max
            && self.maximizer_count > 0
            && self.non_split_maximizers == 0
            && self.above_closed_form == 0
    }

    pub fn m_star(&self) -> usize {
        self.optimal_ms[0]
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), …`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub(crate) fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    for (k, (u, v)) in pairs(n).into_iter().enumerate() {
        if (mask >> k) & 1 == 1 {
            g.put(u, v, true);
        }
    }
    g
}

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Adjacency rows and degrees for order ≤ 8, with a running cM₂.
struct ScanState {
    n: usize,
    adj: [u8; MAX_SCAN_ORDER],
    deg: [i64; MAX_SCAN_ORDER],
    value: i64,
}

impl ScanState {
    fn from_mask(n: usize, pairs: &[(u8, u8)], mask: u64) -> Self {
        let mut s = Self {
            n,
            adj: [0; MAX_SCAN_ORDER],
            deg: [0; MAX_SCAN_ORDER],
            value: 0,
        };
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if (mask >> k) & 1 == 1 {
                s.adj[u as usize] |= 1 << v;
                s.adj[v as usize] |= 1 << u;
                s.deg[u as usize] += 1;
                s.deg[v as usize] += 1;
            }
        }
        s.value = s.full_value();
        s
    }

    fn full_value(&self) -> i64 {
        let mut total = 0;
        for u in 0..self.n {
            // neighbours above u only
            let mut row = self.adj[u] & !((1u16 << (u + 1)) - 1) as u8;
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                total += (self.deg[u] * self.deg[u] - self.deg[v] * self.deg[v]).abs();
            }
        }
        total
    }

    #[inline]
    fn incident(&self, x: usize) -> i64 {
        let dx = self.deg[x] * self.deg[x];
        let mut row = self.adj[x];
        let mut total = 0;
        while row != 0 {
            let y = row.trailing_zeros() as usize;
            row &= row - 1;
            total += (dx - self.deg[y] * self.deg[y]).abs();
        }
        total
    }

    /// cM₂ mass on edges touching `a` or `b`.
    #[inline]
    fn local(&self, a: usize, b: usize) -> i64 {
        let mut total = self.incident(a) + self.incident(b);
        if (self.adj[a] >> b) & 1 == 1 {
            total -= (self.deg[a] * self.deg[a] - self.deg[b] * self.deg[b]).abs();
        }
        total
    }

    #[inline]
    fn flip(&mut self, a: usize, b: usize) {
        let before = self.local(a, b);
        let step = if (self.adj[a] >> b) & 1 == 1 { -1 } else { 1 };
        self.adj[a] ^= 1 << b;
        self.adj[b] ^= 1 << a;
        self.deg[a] += step;
        self.deg[b] += step;
        self.value += self.local(a, b) - before;
    }
}

/// Per-chunk scan result. `best` tracks maximizer bookkeeping for values at
/// or above the closed-form floor; `true_max` is the plain maximum.
#[derive(Debug, Clone)]
struct Partial {
    true_max: i64,
    best: i64,
    count: u64,
    non_split: u64,
    claim_failures: u64,
    above: u64,
    witnesses: BTreeSet<String>,
    first_counterexample: Option<String>,
    scanned: u64,
}

impl Partial {
    fn empty() -> Self {
        Self {
            true_max: i64::MIN,
            best: i64::MIN,
            count: 0,
            non_split: 0,
            claim_failures: 0,
            above: 0,
            witnesses: BTreeSet::new(),
            first_counterexample: None,
            scanned: 0,
        }
    }

    fn merge(mut self, other: Partial, cap: usize) -> Partial {
        self.true_max = self.true_max.max(other.true_max);
        self.above += other.above;
        self.scanned += other.scanned;
        match self.best.cmp(&other.best) {
            std::cmp::Ordering::Greater => {}
            std::cmp::Ordering::Less => {
                self.best = other.best;
                self.count = other.count;
                self.non_split = other.non_split;
                self.claim_failures = other.claim_failures;
                self.witnesses = other.witnesses;
                self.first_counterexample = other.first_counterexample;
            }
            std::cmp::Ordering::Equal => {
                self.count += other.count;
                self.non_split += other.non_split;
                self.claim_failures += other.claim_failures;
                self.witnesses.extend(other.witnesses);
                while self.witnesses.len() > cap {
                    self.witnesses.pop_last();
                }
                self.first_counterexample = match (self.first_counterexample, other.first_counterexample) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
            }
        }
        self
    }
}

struct Scanner<'a> {
    n: usize,
    pairs: &'a [(u8, u8)],
    floor: i64,
    closed_form: i64,
    cap: usize,
}

impl Scanner<'_> {
    fn visit(&self, part: &mut Partial, mask: u64, value: i64) {
        part.true_max = part.true_max.max(value);
        if value > self.closed_form {
            part.above += 1;
        }
        if value < self.floor || value < part.best {
            return;
        }
        if value > part.best {
            part.best = value;
            part.count = 0;
            part.non_split = 0;
            part.claim_failures = 0;
            part.witnesses.clear();
            part.first_counterexample = None;
        }
        part.count += 1;
        let g = graph_from_mask(self.n, mask);
        let code = graph6::encode(&g).expect("order ≤ 8 always encodes");
        if g.is_complete_split().is_none() {
            part.non_split += 1;
            if part.first_counterexample.as_ref().is_none_or(|c| code < *c) {
                part.first_counterexample = Some(code.clone());
            }
        }
        if !check_claims(&g).all_pass() {
            part.claim_failures += 1;
        }
        if part.witnesses.len() < self.cap || part.witnesses.last().is_some_and(|last| code < *last) {
            part.witnesses.insert(code);
            if part.witnesses.len() > self.cap {
                part.witnesses.pop_last();
            }
        }
    }

    /// Visits Gray-code indices `start..end`.
    fn scan(&self, start: u64, end: u64) -> Partial {
        let mut part = Partial::empty();
        let mut mask = gray(start);
        let mut state = ScanState::from_mask(self.n, self.pairs, mask);
        self.visit(&mut part, mask, state.value);
        for i in start + 1..end {
            let k = i.trailing_zeros() as usize;
            let (a, b) = self.pairs[k];
            state.flip(a as usize, b as usize);
            mask ^= 1 << k;
            debug_assert_eq!(mask, gray(i));
            if i % VALIDATE_EVERY == 0 {
                assert_eq!(
                    state.value,
                    cm2(&graph_from_mask(self.n, mask)).get(),
                    "incremental cM₂ diverged at mask {mask:#x}"
                );
            }
            self.visit(&mut part, mask, state.value);
        }
        part.scanned = end - start;
        part
    }
}

fn check_scan_order(n: usize, opts: &ScanOptions) -> Result<()> {
    if !(2..=MAX_SCAN_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            n,
            min: 2,
            max: MAX_SCAN_ORDER,
        });
    }
    if n == 8 && (!opts.allow_n8 || opts.jobs < 2) {
        return Err(Error::OrderEightLocked);
    }
    Ok(())
}

/// Scans all `2^C(n,2)` labeled graphs of order `n`.
pub fn enumerate_extremal(n: usize, opts: &ScanOptions) -> Result<ExtremalReport> {
    check_scan_order(n, opts)?;
    let started = Instant::now();
    let opt = optimal_m(n)?;
    let pair_list: Vec<(u8, u8)> = pairs(n).into_iter().map(|(u, v)| (u as u8, v as u8)).collect();
    let total: u64 = 1 << pair_count(n);
    let scanner = Scanner {
        n,
        pairs: &pair_list,
        floor: opt.value.get(),
        closed_form: opt.value.get(),
        cap: opts.sample_cap,
    };

    let jobs = opts.jobs.max(1);
    let chunks: u64 = if jobs == 1 {
        1
    } else {
        ((jobs as u64) * 8).next_power_of_two().min(total)
    };
    let chunk_len = total / chunks;
    let merged = if jobs == 1 {
        scanner.scan(0, total)
    } else {
        let next = AtomicUsize::new(0);
        let partials: Vec<Partial> = thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|_| {
                    scope.spawn(|| {
                        let mut acc = Partial::empty();
                        loop {
                            let c = next.fetch_add(1, Ordering::Relaxed) as u64;
                            if c >= chunks {
                                break;
                            }
                            let part = scanner.scan(c * chunk_len, (c + 1) * chunk_len);
                            acc = acc.merge(part, scanner.cap);
                        }
                        acc
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect()
        });
        partials
            .into_iter()
            .fold(Partial::empty(), |acc, p| acc.merge(p, scanner.cap))
    };

    // Below the floor nothing was recorded; the counts then stay zero and the
    // report does not verify.
    let recorded = merged.best == merged.true_max;
    Ok(ExtremalReport {
        n,
        global_max: IndexValue(merged.true_max),
        closed_form_max: opt.value,
        optimal_ms: opt.ties,
        maximizer_count: if recorded { merged.count } else { 0 },
        non_split_maximizers: if recorded { merged.non_split } else { 0 },
        claim_failures: if recorded { merged.claim_failures } else { 0 },
        above_closed_form: merged.above,
        sample_witnesses: merged.witnesses.into_iter().collect(),
        first_counterexample: merged.first_counterexample,
        graphs_scanned: merged.scanned,
        elapsed: started.elapsed(),
    })
}
