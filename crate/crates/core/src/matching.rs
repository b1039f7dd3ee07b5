//! Maximum cardinality matching in general graphs.
//!
//! Edmonds' augmenting-path search with blossom contraction: a breadth-first
//! alternating forest is grown from each exposed vertex, odd cycles found
//! along the way are shrunk onto their base, and the first exposed vertex
//! reached yields an augmenting path. A root that admits no augmenting path
//! never admits one later, so one pass over the vertices suffices.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching from edges; `None` if two edges share an endpoint.
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Option<Self> {
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        let mut ends: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        ends.sort_unstable();
        if ends.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Matching { edges })
    }

    fn from_mates(mate: &[usize]) -> Self {
        let edges = (0..mate.len()).filter(|&v| mate[v] != NONE && v < mate[v]).map(|v| (v, mate[v]));
        Matching { edges: edges.collect() }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Matched vertices in increasing order.
    pub fn covered(&self) -> Vec<usize> {
        let mut v: Vec<_> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        2 * self.size() == g.order()
    }

    /// True when every edge belongs to `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }

    /// For each edge, whether one of its endpoints is a leaf of `g`.
    pub fn pendant_flags(&self, g: &Graph) -> Vec<bool> {
        self.edges.iter().map(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1).collect()
    }
}

pub fn maximum_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

pub fn mu(g: &Graph) -> usize {
    maximum_matching(g).size()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    2 * mu(g) == g.order()
}

struct Blossom {
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        Blossom {
            adj: (0..n).map(|v| g.neighbors(v).collect()).collect(),
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn run(mut self) -> Matching {
        let n = self.adj.len();
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_augmenting_path(root) {
                    self.augment(end);
                }
            }
        }
        Matching::from_mates(&self.mate)
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.in_tree[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Odd cycle: contract it onto its base.
                    let b = self.lowest_common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, b, to);
                    self.mark_path(to, b, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = b;
                            if !self.in_tree[u] {
                                self.in_tree[u] = true;
                                self.queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}
