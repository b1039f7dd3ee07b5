//! Recognizers for König-Egerváry, square-stable and (very) well-covered
//! graphs, with witnesses, and the combined classification report.

use serde::Serialize;

use crate::distance::distances;
use crate::graph::{bits, full_mask, Graph};
use crate::matching::{maximum_matching, mu, Matching};
use crate::stable::{alpha, maximal_stable_sets, maximum_stable_set, StableSet};

/// `alpha(g) + mu(g) == n`.
pub fn is_koenig_egervary(g: &Graph) -> bool {
    alpha(g) + mu(g) == g.order()
}

/// Witness that `g = S * H`: `s` is a maximum stable set, `h_vertices` the
/// rest, and `matching` pairs every vertex of `h_vertices` with one of `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeDecomposition {
    pub s: StableSet,
    pub h_vertices: Vec<usize>,
    pub matching: Matching,
}

impl KeDecomposition {
    /// Checks the witness against `g` without trusting how it was built.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let in_s = |v: usize| self.s.contains(v);
        crate::stable::is_stable(g, &self.s.vertices)
            && self.s.size() + self.h_vertices.len() == g.order()
            && self.h_vertices.iter().all(|&h| !in_s(h))
            && self.s.size() >= self.h_vertices.len()
            && self.matching.size() == self.h_vertices.len()
            && self.matching.is_valid_in(g)
            && self.matching.edges().iter().all(|&(u, v)| in_s(u) != in_s(v))
    }
}

/// Decomposition of a König-Egerváry graph around its lexicographically
/// smallest maximum stable set; `None` when `g` is not König-Egerváry.
pub fn ke_decomposition(g: &Graph) -> Option<KeDecomposition> {
    if !is_koenig_egervary(g) {
        return None;
    }
    let s = maximum_stable_set(g);
    let h_vertices: Vec<usize> = (0..g.order()).filter(|&v| !s.contains(v)).collect();
    let matching = match_into(g, &h_vertices, &s);
    // In a König-Egerváry graph every maximum matching runs between S and H
    // and saturates H, so a shortfall here means a solver is wrong.
    assert_eq!(
        matching.size(),
        h_vertices.len(),
        "graph is König-Egerváry but H cannot be matched into S"
    );
    Some(KeDecomposition { s, h_vertices, matching })
}

/// Maximum bipartite matching between `left` and the members of `right`,
/// using only edges of `g` (Kuhn's augmenting paths after a greedy pass).
fn match_into(g: &Graph, left: &[usize], right: &StableSet) -> Matching {
    let n = g.order();
    let mut owner = vec![usize::MAX; n];
    let mut mate = vec![usize::MAX; n];
    let candidates = |h: usize| g.neighbors(h).filter(|&s| right.contains(s)).collect::<Vec<_>>();
    let lists: Vec<Vec<usize>> = (0..n).map(|v| if left.contains(&v) { candidates(v) } else { Vec::new() }).collect();

    for &h in left {
        if let Some(&s) = lists[h].iter().find(|&&s| owner[s] == usize::MAX) {
            owner[s] = h;
            mate[h] = s;
        }
    }
    fn augment(h: usize, lists: &[Vec<usize>], owner: &mut [usize], mate: &mut [usize], seen: &mut [bool]) -> bool {
        for &s in &lists[h] {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            if owner[s] == usize::MAX || augment(owner[s], lists, owner, mate, seen) {
                owner[s] = h;
                mate[h] = s;
                return true;
            }
        }
        false
    }
    for &h in left {
        if mate[h] == usize::MAX {
            let mut seen = vec![false; n];
            augment(h, &lists, &mut owner, &mut mate, &mut seen);
        }
    }
    Matching::new(left.iter().filter(|&&h| mate[h] != usize::MAX).map(|&h| (h, mate[h])))
        .expect("bipartite matching is disjoint")
}

/// `alpha(g) == alpha(g²)`.
pub fn is_square_stable(g: &Graph) -> bool {
    alpha(g) == alpha(&g.square())
}

/// A maximum stable set whose members are pairwise at distance at least 3,
/// if one exists. The search runs on hop distances directly and does not
/// build the square.
pub fn distance3_stability_system(g: &Graph) -> Option<StableSet> {
    let n = g.order();
    let target = alpha(g) as u32;
    let d = distances(g);
    let close: Vec<u64> = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && d.get(u, v) <= 2).fold(0, |m, v| m | (1 << v)))
        .collect();

    fn search(close: &[u64], chosen: u64, cand: u64, target: u32) -> Option<u64> {
        let size = chosen.count_ones();
        if size == target {
            return Some(chosen);
        }
        if size + cand.count_ones() < target {
            return None;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        search(close, chosen | bit, cand & !bit & !close[v], target)
            .or_else(|| search(close, chosen, cand & !bit, target))
    }

    search(&close, 0, full_mask(n), target)
        .map(|m| StableSet { vertices: bits(m).collect(), maximal: true, maximum: true })
}

/// Perfect matching made of pendant edges, if any.
///
/// A leaf can only be matched along its pendant edge, so those edges are
/// forced; the graph has such a matching exactly when the forced edges are
/// disjoint and cover every vertex.
pub fn pendant_perfect_matching(g: &Graph) -> Option<Matching> {
    let n = g.order();
    let mut mate = vec![usize::MAX; n];
    for v in g.leaves() {
        let w = g.neighbors(v).next().expect("leaf has a neighbor");
        if mate[v] == w {
            continue;
        }
        if mate[v] != usize::MAX || mate[w] != usize::MAX {
            return None;
        }
        mate[v] = w;
        mate[w] = v;
    }
    if mate.contains(&usize::MAX) {
        return None;
    }
    Matching::new((0..n).filter(|&v| v < mate[v]).map(|v| (v, mate[v])))
}

/// No isolated vertices and every maximal stable set is maximum.
///
/// `K1` is not well-covered; the graph on no vertices is.
pub fn is_well_covered(g: &Graph) -> bool {
    (0..g.order()).all(|v| g.degree(v) > 0) && maximal_stable_sets(g).all(|s| s.maximum)
}

/// Well-covered with `n == 2 * alpha`.
pub fn is_very_well_covered(g: &Graph) -> bool {
    g.order() == 2 * alpha(g) && is_well_covered(g)
}

/// Whether the four equivalent conditions were found to agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EquivalenceStatus {
    Consistent,
    Inconsistent,
    /// Disconnected or fewer than two vertices; the equivalence is not claimed.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub alpha: usize,
    pub mu: usize,
    pub alpha_sq: usize,
    pub mu_sq: usize,
    pub ke: bool,
    pub ke_square: bool,
    pub square_stable: bool,
    pub perfect_matching: bool,
    pub pendant_pm: Option<Matching>,
    pub well_covered: bool,
    pub very_well_covered: bool,
    pub leaf_count: usize,
    pub equivalence: EquivalenceStatus,
    pub stability_system: StableSet,
    pub distance3_system: Option<StableSet>,
    pub ke_decomposition: Option<KeDecomposition>,
}

impl ClassificationReport {
    /// `[G² is KE, G square-stable and KE, pendant perfect matching,
    /// very well-covered with alpha leaves]`.
    pub fn equivalence_conditions(&self) -> [bool; 4] {
        [
            self.ke_square,
            self.square_stable && self.ke,
            self.pendant_pm.is_some(),
            self.very_well_covered && self.leaf_count == self.alpha,
        ]
    }

    pub fn equivalence_consistent(&self) -> Option<bool> {
        match self.equivalence {
            EquivalenceStatus::Consistent => Some(true),
            EquivalenceStatus::Inconsistent => Some(false),
            EquivalenceStatus::NotApplicable => None,
        }
    }
}

/// Computes every field from the exact solvers, each exactly once.
pub fn classify(g: &Graph) -> ClassificationReport {
    let n = g.order();
    let sq = g.square();
    let stability_system = maximum_stable_set(g);
    let alpha = stability_system.size();
    let mu = maximum_matching(g).size();
    let alpha_sq = crate::stable::alpha(&sq);
    let mu_sq = crate::matching::mu(&sq);
    let ke = alpha + mu == n;
    let well_covered = is_well_covered(g);
    let connected = g.is_connected();

    let mut report = ClassificationReport {
        n,
        m: g.size(),
        connected,
        alpha,
        mu,
        alpha_sq,
        mu_sq,
        ke,
        ke_square: alpha_sq + mu_sq == n,
        square_stable: alpha == alpha_sq,
        perfect_matching: 2 * mu == n,
        pendant_pm: pendant_perfect_matching(g),
        well_covered,
        very_well_covered: well_covered && n == 2 * alpha,
        leaf_count: g.leaves().len(),
        equivalence: EquivalenceStatus::NotApplicable,
        stability_system,
        distance3_system: distance3_stability_system(g),
        ke_decomposition: if ke { ke_decomposition(g) } else { None },
    };
    if connected && n >= 2 {
        let p = report.equivalence_conditions();
        report.equivalence = if p.iter().all(|&x| x == p[0]) {
            EquivalenceStatus::Consistent
        } else {
            EquivalenceStatus::Inconsistent
        };
    }
    report
}
