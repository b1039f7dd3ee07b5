//! Corpus generation and per-theorem verification sweeps.

pub mod corpus;
pub mod fixtures;
mod report;
mod verify;

use std::path::PathBuf;

use thiserror::Error;

use crate::graph6::Graph6Error;

pub use corpus::{
    enumerate_connected, enumerate_trees, prufer_decode, random_trees, CorpusKind, CorpusSpec,
    GraphStream, RandomTrees,
};
pub use fixtures::fixtures;
pub use report::{VerificationReport, Violation, MAX_CERTIFICATES};
pub use verify::{
    check_graph, probe, verify, verify_chain, verify_lemma_square_stable, verify_necessity,
    verify_proposition_square_ke, verify_theorem_main, verify_tree_corollary, verify_with, Check,
    Discrepancy, Probe,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),
    #[error("{corpus} supports n <= {max}, got {n}; ingest larger corpora as a graph6 file")]
    OrderOutOfRange { corpus: &'static str, n: usize, max: usize },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}:{line}: {source}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}
