//! Exact invariants of a graph and its square.
//!
//! The crate computes the square of a graph, matching and stability numbers,
//! the clique-cover, domination and independent domination numbers, and
//! recognizes König-Egerváry, square-stable and (very) well-covered graphs.
//! The [`harness`] module sweeps labeled graph and tree corpora and checks the
//! relations between those properties, reporting any counterexample as a
//! graph6 certificate.
//!
//! Vertices are `0..n`. The exact solvers for NP-hard invariants work on
//! bitmask adjacency and accept at most 64 vertices.

pub mod chain;
pub mod cover;
pub mod distance;
pub mod edgelist;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod matching;
pub mod recognizers;
pub mod stable;
pub mod tree;

pub use chain::{invariant_chain, ChainViolation, InvariantBundle};
pub use cover::{clique_cover_number, domination_number};
pub use distance::{distances, DistanceMatrix, INFINITE};
pub use edgelist::{parse_edge_lists, to_edge_list, EdgeListError};
pub use graph::{Graph, GraphError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use matching::{has_perfect_matching, maximum_matching, mu, Matching};
pub use recognizers::{
    classify, distance3_stability_system, is_koenig_egervary, is_square_stable,
    is_very_well_covered, is_well_covered, ke_decomposition, pendant_perfect_matching,
    ClassificationReport, KeDecomposition, EquivalenceStatus,
};
pub use stable::{
    alpha, independent_domination_number, maximal_stable_sets, maximum_stable_set, StableSet,
};
pub use tree::{alpha_tree, NotATree};
