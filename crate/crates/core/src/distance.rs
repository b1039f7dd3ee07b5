use std::collections::VecDeque;

use crate::graph::Graph;

/// Distance between vertices in different components. Larger than any hop count.
pub const INFINITE: usize = usize::MAX;

/// All-pairs hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<usize>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance, or `None` for graphs without vertices.
    pub fn max_finite(&self) -> Option<usize> {
        self.dist.iter().copied().filter(|&d| d != INFINITE).max()
    }
}

/// One breadth-first traversal per vertex.
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut dist = vec![INFINITE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let d = row[v] + 1;
            for u in g.neighbors(v) {
                if row[u] == INFINITE {
                    row[u] = d;
                    queue.push_back(u);
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}
