//! Simple undirected graphs on the vertex set `0..n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Largest order stored as one `u64` neighbor mask per vertex.
pub const DENSE_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Adjacency {
    Dense(Vec<u64>),
    Sparse(Vec<BTreeSet<usize>>),
}

/// An immutable simple graph.
///
/// Graphs of order at most [`DENSE_LIMIT`] keep one bitmask per vertex, which
/// is what the exact solvers work on. Larger graphs fall back to ordered sets
/// and only support the polynomial operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edge_count: usize,
    adj: Adjacency,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let adj = if n <= DENSE_LIMIT {
            Adjacency::Dense(vec![0; n])
        } else {
            Adjacency::Sparse(vec![BTreeSet::new(); n])
        };
        Graph { n, edge_count: 0, adj }
    }

    /// Builds a graph from vertex pairs. Repeated pairs collapse to one edge.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Wraps per-vertex masks that are already symmetric and loop-free.
    pub(crate) fn from_masks(masks: Vec<u64>) -> Self {
        debug_assert!(masks.len() <= DENSE_LIMIT);
        debug_assert!(masks.iter().enumerate().all(|(v, &m)| m & (1 << v) == 0
            && bits(m).all(|u| masks[u] & (1 << v) != 0)));
        let twice: u32 = masks.iter().map(|m| m.count_ones()).sum();
        Graph {
            n: masks.len(),
            edge_count: twice as usize / 2,
            adj: Adjacency::Dense(masks),
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        let fresh = match &mut self.adj {
            Adjacency::Dense(m) => {
                let fresh = m[u] & (1 << v) == 0;
                m[u] |= 1 << v;
                m[v] |= 1 << u;
                fresh
            }
            Adjacency::Sparse(s) => {
                let fresh = s[u].insert(v);
                s[v].insert(u);
                fresh
            }
        };
        if fresh {
            self.edge_count += 1;
        }
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// The cycle `0-1-...-(n-1)-0`. For `n < 3` this is the path on `n` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edge_list(n, edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edge_list(n, edges).expect("valid complete graph")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edge_list(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        match &self.adj {
            Adjacency::Dense(m) => m[v].count_ones() as usize,
            Adjacency::Sparse(s) => s[v].len(),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.adj {
            Adjacency::Dense(m) => u < self.n && v < self.n && m[u] & (1 << v) != 0,
            Adjacency::Sparse(s) => s.get(u).is_some_and(|set| set.contains(&v)),
        }
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        match &self.adj {
            Adjacency::Dense(m) => Neighbors::Dense(bits(m[v])),
            Adjacency::Sparse(s) => Neighbors::Sparse(s[v].iter()),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Per-vertex neighbor masks, present when `order() <= DENSE_LIMIT`.
    pub fn masks(&self) -> Option<&[u64]> {
        match &self.adj {
            Adjacency::Dense(m) => Some(m),
            Adjacency::Sparse(_) => None,
        }
    }

    /// Masks for the exact solvers.
    ///
    /// # Panics
    /// If the graph has more than [`DENSE_LIMIT`] vertices.
    pub(crate) fn dense(&self) -> &[u64] {
        self.masks().unwrap_or_else(|| {
            panic!("exact solvers support at most {DENSE_LIMIT} vertices, got {}", self.n)
        })
    }

    pub fn complement(&self) -> Graph {
        let n = self.n;
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edge_list(n, edges.filter(|&(u, v)| !self.has_edge(u, v)))
            .expect("complement of a valid graph")
    }

    /// True when `n <= 1` or a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        if let Some(m) = self.masks() {
            let all = full_mask(self.n);
            let (mut seen, mut frontier) = (1u64, 1u64);
            while frontier != 0 {
                let next = bits(frontier).fold(0, |acc, v| acc | m[v]) & !seen;
                seen |= next;
                frontier = next;
            }
            return seen == all;
        }
        self.components().len() == 1
    }

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                        queue.push_back(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count + 1 == self.n && self.is_connected()
    }

    /// Vertices of degree exactly one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The square: distinct vertices are adjacent iff their distance is at most 2.
    pub fn square(&self) -> Graph {
        match &self.adj {
            Adjacency::Dense(m) => {
                let sq = (0..self.n)
                    .map(|v| (bits(m[v]).fold(m[v], |acc, u| acc | m[u])) & !(1 << v))
                    .collect();
                Graph::from_masks(sq)
            }
            Adjacency::Sparse(s) => {
                let mut g = Graph::empty(self.n);
                for v in 0..self.n {
                    for &u in &s[v] {
                        g.insert_edge(v, u);
                        for &w in &s[u] {
                            if w != v {
                                g.insert_edge(v, w);
                            }
                        }
                    }
                }
                g
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub enum Neighbors<'a> {
    Dense(Bits),
    Sparse(std::collections::btree_set::Iter<'a, usize>),
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            Neighbors::Dense(b) => b.next(),
            Neighbors::Sparse(it) => it.next().copied(),
        }
    }
}

/// Iterator over the set bit positions of a mask, lowest first.
#[derive(Debug, Clone)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { u: 0, v: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(3, [(1, 1)]), Err(GraphError::Loop(1)));
    }

    #[test]
    fn fig1_edges() {
        let g = Graph::from_edge_list(5, [(0, 1), (0, 2), (1, 3), (1, 4), (3, 4)]).unwrap();
        assert_eq!(g.size(), 5);
    }

    #[test]
    fn square_examples() {
        assert_eq!(Graph::star(3).square(), Graph::complete(4));
        let p4 = Graph::path(4).square();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let fig1 = Graph::from_edge_list(5, [(0, 1), (0, 2), (1, 3), (1, 4), (3, 4)]).unwrap();
        let sq = fig1.square();
        assert_eq!(sq.size(), 8);
        for (u, v) in [(0, 3), (0, 4), (1, 2)] {
            assert!(sq.has_edge(u, v));
        }
    }

    #[test]
    fn leaves_examples() {
        assert_eq!(Graph::path(4).leaves(), vec![0, 3]);
        assert!(Graph::cycle(6).leaves().is_empty());
        assert_eq!(Graph::star(3).leaves(), vec![1, 2, 3]);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::from_edge_list(3, [(0, 1)]).unwrap().is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn sparse_fallback_matches_dense_semantics() {
        let n = 70;
        let g = Graph::cycle(n);
        assert!(g.masks().is_none());
        assert_eq!(g.size(), n);
        assert!(g.is_connected());
        let sq = g.square();
        assert_eq!(sq.size(), 2 * n);
        assert!(sq.has_edge(0, 68) && sq.has_edge(0, 2) && !sq.has_edge(0, 3));
        assert_eq!(Graph::path(n).leaves(), vec![0, n - 1]);
        assert!(Graph::path(n).is_tree());
    }

    #[test]
    fn complement_of_c5_is_c5() {
        let c = Graph::cycle(5).complement();
        assert_eq!(c.size(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
    }
}
