use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("graph with {n} vertices and {m} edges is not a tree")]
pub struct NotATree {
    pub n: usize,
    pub m: usize,
}

/// Stability number of a tree by dynamic programming over a rooted order.
///
/// Works for trees of any order and shares no code with the general solver.
pub fn alpha_tree(g: &Graph) -> Result<usize, NotATree> {
    if !g.is_tree() {
        return Err(NotATree { n: g.order(), m: g.size() });
    }
    let n = g.order();
    // Preorder from vertex 0; children are finished before their parent when
    // the order is walked backwards.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for u in g.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    // with[v]: best in v's subtree using v; without[v]: best not using v.
    let mut with = vec![1usize; n];
    let mut without = vec![0usize; n];
    for &v in order.iter().skip(1).rev() {
        let p = parent[v];
        with[p] += without[v];
        without[p] += with[v].max(without[v]);
    }
    Ok(with[0].max(without[0]))
}
