use serde::Serialize;
use thiserror::Error;

use crate::cover::{clique_cover_number, domination_number};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::stable::{alpha, independent_domination_number};

/// The six invariants of the chain
/// `alpha(G²) <= theta(G²) <= gamma(G) <= i(G) <= alpha(G) <= theta(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub alpha_g2: usize,
    pub theta_g2: usize,
    pub gamma: usize,
    pub i_dom: usize,
    pub alpha: usize,
    pub theta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invariant chain violated on {graph}: {values:?}")]
pub struct ChainViolation {
    /// graph6 of the offending graph, or its edge list when too large.
    pub graph: String,
    pub values: [usize; 6],
}

impl InvariantBundle {
    /// Accepts the values only when they form a non-decreasing chain.
    pub fn new(values: [usize; 6], g: &Graph) -> Result<Self, ChainViolation> {
        if values.windows(2).any(|w| w[0] > w[1]) {
            let graph = to_graph6(g).unwrap_or_else(|_| format!("{:?}", g.edges().collect::<Vec<_>>()));
            return Err(ChainViolation { graph, values });
        }
        let [alpha_g2, theta_g2, gamma, i_dom, alpha, theta] = values;
        Ok(InvariantBundle { alpha_g2, theta_g2, gamma, i_dom, alpha, theta })
    }

    pub fn values(&self) -> [usize; 6] {
        [self.alpha_g2, self.theta_g2, self.gamma, self.i_dom, self.alpha, self.theta]
    }

    pub fn all_equal(&self) -> bool {
        let v = self.values();
        v.iter().all(|&x| x == v[0])
    }
}

/// Computes all six values by their exact solvers.
pub fn invariant_values(g: &Graph) -> [usize; 6] {
    let sq = g.square();
    [
        alpha(&sq),
        clique_cover_number(&sq),
        domination_number(g),
        independent_domination_number(g),
        alpha(g),
        clique_cover_number(g),
    ]
}

pub fn invariant_chain(g: &Graph) -> Result<InvariantBundle, ChainViolation> {
    InvariantBundle::new(invariant_values(g), g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(invariant_chain(&Graph::path(4)).unwrap().values(), [2; 6]);
        assert_eq!(invariant_chain(&Graph::star(3)).unwrap().values(), [1, 1, 1, 1, 3, 3]);
        assert_eq!(invariant_chain(&Graph::cycle(5)).unwrap().values(), [1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn rejects_broken_chain() {
        let err = InvariantBundle::new([2, 1, 1, 1, 1, 1], &Graph::path(4)).unwrap_err();
        assert_eq!(err.graph, "Ch");
    }
}
