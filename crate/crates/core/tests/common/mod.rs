//! Brute-force oracles. Deliberately naive and independent of the library's
//! solvers: they only use `Graph` accessors.

#![allow(dead_code)]

use ke_square_core::Graph;
use rand::Rng;

fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}

fn members(s: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| s & (1 << v) != 0).collect()
}

pub fn independent(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().all(|&u| vs.iter().all(|&v| u == v || !g.has_edge(u, v)))
}

pub fn clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)))
}

/// Largest independent vertex subset.
pub fn alpha(g: &Graph) -> usize {
    let n = g.order();
    subsets(n).filter(|&s| independent(g, &members(s, n))).map(|s| s.count_ones() as usize).max().unwrap()
}

/// Largest set of pairwise disjoint edges, by trying every edge subset.
pub fn mu_edge_subsets(g: &Graph) -> usize {
    let edges: Vec<_> = g.edges().collect();
    assert!(edges.len() <= 24, "too many edges for subset search");
    (0u32..1 << edges.len())
        .filter(|&s| {
            let mut used = vec![false; g.order()];
            edges.iter().enumerate().filter(|(i, _)| s & (1 << i) != 0).all(|(_, &(u, v))| {
                let free = !used[u] && !used[v];
                used[u] = true;
                used[v] = true;
                free
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Largest matching by exhausting all matchings: the lowest undecided vertex
/// is either left unmatched or matched to each undecided neighbor in turn.
pub fn mu(g: &Graph) -> usize {
    fn go(g: &Graph, done: &mut Vec<bool>) -> usize {
        let Some(v) = (0..g.order()).find(|&v| !done[v]) else { return 0 };
        done[v] = true;
        let mut best = go(g, done);
        for u in g.neighbors(v).collect::<Vec<_>>() {
            if !done[u] {
                done[u] = true;
                best = best.max(1 + go(g, done));
                done[u] = false;
            }
        }
        done[v] = false;
        best
    }
    go(g, &mut vec![false; g.order()])
}

pub fn maximal_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    subsets(n)
        .map(|s| members(s, n))
        .filter(|vs| {
            independent(g, vs)
                && (0..n).all(|w| vs.contains(&w) || vs.iter().any(|&u| g.has_edge(u, w)))
        })
        .collect()
}

pub fn gamma(g: &Graph) -> usize {
    let n = g.order();
    subsets(n)
        .map(|s| members(s, n))
        .filter(|d| (0..n).all(|w| d.contains(&w) || d.iter().any(|&u| g.has_edge(u, w))))
        .map(|d| d.len())
        .min()
        .unwrap()
}

/// Minimum clique partition by dynamic programming over vertex subsets.
pub fn theta(g: &Graph) -> usize {
    let n = g.order();
    let full = (1usize << n) - 1;
    let is_clique: Vec<bool> = (0..=full).map(|s| clique(g, &members(s as u32, n))).collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        // Sub-cliques of s that contain its lowest vertex.
        let rest = s & !low;
        let mut sub = rest;
        loop {
            let c = sub | low;
            if is_clique[c] && best[s & !c] != usize::MAX {
                best[s] = best[s].min(best[s & !c] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full]
}

/// All-pairs hop distances by Floyd–Warshall; `usize::MAX` when unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let inf = usize::MAX;
    let mut d = vec![vec![inf; n]; n];
    for v in 0..n {
        d[v][v] = 0;
        for u in g.neighbors(v) {
            d[v][u] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != inf && d[k][j] != inf && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Whether some perfect matching uses only edges with a leaf endpoint.
pub fn has_pendant_perfect_matching(g: &Graph) -> bool {
    let pendant: Vec<_> = g.edges().filter(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1).collect();
    let n = g.order();
    (0u64..1 << pendant.len()).any(|s| {
        let mut cover = vec![0; n];
        for (i, &(u, v)) in pendant.iter().enumerate() {
            if s & (1 << i) != 0 {
                cover[u] += 1;
                cover[v] += 1;
            }
        }
        cover.iter().all(|&c| c == 1)
    })
}

/// Erdős–Rényi graph with a random order in `1..=n_max` and random density.
pub fn random_graph<R: Rng>(rng: &mut R, n_max: usize) -> Graph {
    let n = rng.gen_range(1..=n_max);
    let p: f64 = rng.gen_range(0.05..0.95);
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edge_list(n, edges).unwrap()
}
