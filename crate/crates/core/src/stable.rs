//! Stable (independent) sets: exact maximum search and maximal-set enumeration.

use serde::Serialize;

use crate::graph::{bits, full_mask, Graph};

/// An independent vertex set, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableSet {
    pub vertices: Vec<usize>,
    /// No outside vertex can be added.
    pub maximal: bool,
    /// Cardinality equals the stability number of the host graph.
    pub maximum: bool,
}

impl StableSet {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    fn from_mask(mask: u64, maximal: bool, maximum: bool) -> Self {
        StableSet { vertices: bits(mask).collect(), maximal, maximum }
    }
}

pub fn is_stable(g: &Graph, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// Stable and no vertex outside has all of its neighbors outside.
pub fn is_maximal_stable(g: &Graph, vertices: &[usize]) -> bool {
    is_stable(g, vertices)
        && (0..g.order())
            .filter(|v| !vertices.contains(v))
            .all(|v| vertices.iter().any(|&u| g.has_edge(u, v)))
}

/// Stability number.
///
/// # Panics
/// If `g` has more than 64 vertices.
pub fn alpha(g: &Graph) -> usize {
    maximum_stable_set(g).size()
}

/// A maximum stable set; among all of them, the lexicographically smallest
/// sorted vertex list.
///
/// # Panics
/// If `g` has more than 64 vertices.
pub fn maximum_stable_set(g: &Graph) -> StableSet {
    let adj = g.dense();
    let mut search = MaxStable { adj, best: 0, best_size: 0 };
    search.expand(0, 0, full_mask(g.order()));
    StableSet::from_mask(search.best, true, true)
}

/// Upper bound on the stability number of the subgraph induced by `cand`:
/// the number of cliques in a greedy clique partition.
pub(crate) fn clique_partition_bound(adj: &[u64], mut cand: u64) -> u32 {
    let mut count = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut clique = 1u64 << v;
        let mut ext = cand & adj[v];
        while ext != 0 {
            let u = ext.trailing_zeros() as usize;
            clique |= 1 << u;
            ext &= adj[u];
        }
        cand &= !clique;
        count += 1;
    }
    count
}

struct MaxStable<'a> {
    adj: &'a [u64],
    best: u64,
    best_size: u32,
}

impl MaxStable<'_> {
    // Branches on the lowest candidate, taking it first, so complete sets are
    // reached in lexicographic order and only strict improvements are kept.
    fn expand(&mut self, current: u64, size: u32, cand: u64) {
        if cand == 0 {
            if size > self.best_size {
                self.best = current;
                self.best_size = size;
            }
            return;
        }
        if size + clique_partition_bound(self.adj, cand) <= self.best_size {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        self.expand(current | bit, size + 1, cand & !bit & !self.adj[v]);
        // A candidate with no candidate neighbors is always worth taking.
        if self.adj[v] & cand != 0 {
            self.expand(current, size, cand & !bit);
        }
    }
}

/// Every maximal stable set exactly once.
///
/// Bron–Kerbosch with pivoting, run on the complement so that cliques found
/// there are the stable sets of `g`. Each emitted set carries `maximal = true`
/// and `maximum` against the stability number computed up front.
///
/// # Panics
/// If `g` has more than 64 vertices.
pub fn maximal_stable_sets(g: &Graph) -> MaximalStableSets {
    let adj = g.dense();
    let all = full_mask(g.order());
    let non_adj: Vec<u64> = (0..g.order()).map(|v| all & !adj[v] & !(1 << v)).collect();
    let mut it = MaximalStableSets {
        non_adj,
        stack: Vec::new(),
        pending_empty: g.order() == 0,
        alpha: alpha(g),
    };
    if all != 0 {
        let frame = it.frame(0, all, 0);
        it.stack.push(frame);
    }
    it
}

struct Frame {
    r: u64,
    p: u64,
    x: u64,
    todo: u64,
}

pub struct MaximalStableSets {
    non_adj: Vec<u64>,
    stack: Vec<Frame>,
    pending_empty: bool,
    alpha: usize,
}

impl MaximalStableSets {
    fn frame(&self, r: u64, p: u64, x: u64) -> Frame {
        let pivot = bits(p | x)
            .max_by_key(|&u| (p & self.non_adj[u]).count_ones())
            .expect("frame with candidates");
        Frame { r, p, x, todo: p & !self.non_adj[pivot] }
    }

    fn emit(&self, r: u64) -> StableSet {
        StableSet::from_mask(r, true, r.count_ones() as usize == self.alpha)
    }
}

impl Iterator for MaximalStableSets {
    type Item = StableSet;

    fn next(&mut self) -> Option<StableSet> {
        if self.pending_empty {
            self.pending_empty = false;
            return Some(self.emit(0));
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.todo == 0 {
                self.stack.pop();
                continue;
            }
            let v = top.todo.trailing_zeros() as usize;
            let bit = 1u64 << v;
            top.todo &= !bit;
            let (r, p, x) = (top.r | bit, top.p & self.non_adj[v], top.x & self.non_adj[v]);
            top.p &= !bit;
            top.x |= bit;
            if p == 0 && x == 0 {
                return Some(self.emit(r));
            }
            if p != 0 {
                let frame = self.frame(r, p, x);
                self.stack.push(frame);
            }
        }
    }
}

/// Smallest maximal stable set size.
pub fn independent_domination_number(g: &Graph) -> usize {
    maximal_stable_sets(g).map(|s| s.size()).min().unwrap_or(0)
}
