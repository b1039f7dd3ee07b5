//! Exact domination and clique-cover numbers.

use crate::graph::{bits, full_mask, Graph};

/// Minimum size of a set whose closed neighborhoods cover every vertex.
///
/// # Panics
/// If `g` has more than 64 vertices.
pub fn domination_number(g: &Graph) -> usize {
    let adj = g.dense();
    let n = g.order();
    let closed: Vec<u64> = (0..n).map(|v| adj[v] | (1 << v)).collect();
    let reach = closed.iter().map(|c| c.count_ones()).max().unwrap_or(1);
    let mut best = n;
    dominate(&closed, full_mask(n), 0, 0, reach, &mut best);
    best
}

fn dominate(closed: &[u64], all: u64, covered: u64, used: usize, reach: u32, best: &mut usize) {
    let open = all & !covered;
    if open == 0 {
        *best = (*best).min(used);
        return;
    }
    let needed = open.count_ones().div_ceil(reach) as usize;
    if used + needed >= *best {
        return;
    }
    // The lowest undominated vertex must be covered by one of its closed neighbors.
    let u = open.trailing_zeros() as usize;
    for w in bits(closed[u]) {
        dominate(closed, all, covered | closed[w], used + 1, reach, best);
    }
}

/// Minimum number of cliques covering every vertex, as the chromatic number
/// of the complement: the smallest `k` for which the vertices split into `k`
/// cliques, tried in increasing order.
///
/// # Panics
/// If `g` has more than 64 vertices.
pub fn clique_cover_number(g: &Graph) -> usize {
    let adj = g.dense();
    let n = g.order();
    // Vertices with many non-neighbors first; they constrain the split most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (adj[v].count_ones(), v));
    let mut classes = Vec::with_capacity(n);
    (0..=n)
        .find(|&k| split_into_cliques(adj, &order, &mut classes, k))
        .expect("n singleton cliques always suffice")
}

fn split_into_cliques(adj: &[u64], order: &[usize], classes: &mut Vec<u64>, k: usize) -> bool {
    let Some((&v, rest)) = order.split_first() else {
        return true;
    };
    for i in 0..classes.len() {
        if classes[i] & !adj[v] == 0 {
            classes[i] |= 1 << v;
            if split_into_cliques(adj, rest, classes, k) {
                classes[i] &= !(1 << v);
                return true;
            }
            classes[i] &= !(1 << v);
        }
    }
    // Opening at most one new class per step breaks the symmetry between classes.
    if classes.len() < k {
        classes.push(1 << v);
        let found = split_into_cliques(adj, rest, classes, k);
        classes.pop();
        return found;
    }
    false
}
