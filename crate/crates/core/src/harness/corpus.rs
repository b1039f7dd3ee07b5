//! Graph corpora: exhaustive labeled graphs, labeled trees, seeded random
//! trees, graph6 files and the figure fixtures. All of them stream.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fixtures::named_examples;
use super::HarnessError;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, FILE_HEADER};

pub const MAX_CONNECTED_ORDER: usize = 7;
pub const MAX_TREE_ORDER: usize = 9;
/// Keeps every random tree encodable as a graph6 certificate.
pub const MAX_RANDOM_TREE_ORDER: usize = crate::graph6::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusKind {
    ExhaustiveConnected,
    ExhaustiveTrees,
    RandomTrees,
    Graph6File(PathBuf),
    /// The figure fixtures and the small named example graphs.
    Fixtures,
}

impl CorpusKind {
    pub fn name(&self) -> &'static str {
        match self {
            CorpusKind::ExhaustiveConnected => "exhaustive-connected",
            CorpusKind::ExhaustiveTrees => "exhaustive-trees",
            CorpusKind::RandomTrees => "random-trees",
            CorpusKind::Graph6File(_) => "graph6-file",
            CorpusKind::Fixtures => "fixtures",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub kind: CorpusKind,
    pub n_min: usize,
    pub n_max: usize,
    /// Number of graphs drawn by the random kinds.
    pub sample_count: usize,
    pub seed: u64,
}

pub type GraphStream = Box<dyn Iterator<Item = Result<Graph, HarnessError>> + Send>;

impl CorpusSpec {
    pub fn new(kind: CorpusKind, n_min: usize, n_max: usize) -> Self {
        CorpusSpec { kind, n_min, n_max, sample_count: 1, seed: 0 }
    }

    pub fn with_samples(mut self, sample_count: usize, seed: u64) -> Self {
        self.sample_count = sample_count;
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(HarnessError::InvalidCorpus(format!(
                "need 2 <= n_min <= n_max, got n_min={} n_max={}",
                self.n_min, self.n_max
            )));
        }
        let cap = match self.kind {
            CorpusKind::ExhaustiveConnected => Some(MAX_CONNECTED_ORDER),
            CorpusKind::ExhaustiveTrees => Some(MAX_TREE_ORDER),
            CorpusKind::RandomTrees => Some(MAX_RANDOM_TREE_ORDER),
            _ => None,
        };
        if let Some(max) = cap {
            if self.n_max > max {
                return Err(HarnessError::OrderOutOfRange { corpus: self.kind.name(), n: self.n_max, max });
            }
        }
        if self.kind == CorpusKind::RandomTrees && self.sample_count == 0 {
            return Err(HarnessError::InvalidCorpus("random-trees needs sample_count >= 1".into()));
        }
        Ok(())
    }

    /// Streams the corpus. Order bounds apply to the generated kinds; file and
    /// fixture corpora are passed through whole.
    pub fn graphs(&self) -> Result<GraphStream, HarnessError> {
        self.validate()?;
        let (lo, hi) = (self.n_min, self.n_max);
        Ok(match &self.kind {
            CorpusKind::ExhaustiveConnected => Box::new(
                (lo..=hi).flat_map(|n| enumerate_connected(n).expect("validated order")).map(Ok),
            ),
            CorpusKind::ExhaustiveTrees => {
                Box::new((lo..=hi).flat_map(|n| enumerate_trees(n).expect("validated order")).map(Ok))
            }
            CorpusKind::RandomTrees => Box::new(
                RandomTrees::between(lo, hi, self.sample_count, self.seed).map(Ok),
            ),
            CorpusKind::Graph6File(path) => Box::new(read_graph6_file(path.clone())?),
            CorpusKind::Fixtures => Box::new(named_examples().into_iter().map(|(_, g)| Ok(g))),
        })
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Every labeled connected graph on `n` vertices, once each, by filtering all
/// `2^(n(n-1)/2)` labeled graphs.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph> + Send, HarnessError> {
    if !(2..=MAX_CONNECTED_ORDER).contains(&n) {
        return Err(HarnessError::OrderOutOfRange { corpus: "exhaustive-connected", n, max: MAX_CONNECTED_ORDER });
    }
    let pairs = pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total)
        .map(move |code| {
            let mut masks = vec![0u64; n];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if code & (1 << k) != 0 {
                    masks[i] |= 1 << j;
                    masks[j] |= 1 << i;
                }
            }
            Graph::from_masks(masks)
        })
        .filter(Graph::is_connected))
}

/// Tree of a Prüfer sequence over `0..n`, `n = sequence.len() + 2`.
///
/// Repeatedly joins the smallest current leaf to the next sequence entry,
/// then joins the last two remaining vertices.
pub fn prufer_decode(sequence: &[usize]) -> Graph {
    let n = sequence.len() + 2;
    assert!(sequence.iter().all(|&a| a < n), "Prüfer entries must lie in 0..{n}");
    let mut degree = vec![1usize; n];
    for &a in sequence {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &a in sequence {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, a));
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.insert(a);
        }
    }
    let u = leaves.pop_first().expect("two vertices remain");
    let v = leaves.pop_first().expect("two vertices remain");
    edges.push((u, v));
    Graph::from_edge_list(n, edges).expect("decoded tree is simple")
}

/// Every labeled tree on `n` vertices, once each: `n^(n-2)` Prüfer sequences
/// in lexicographic order.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph> + Send, HarnessError> {
    if !(2..=MAX_TREE_ORDER).contains(&n) {
        return Err(HarnessError::OrderOutOfRange { corpus: "exhaustive-trees", n, max: MAX_TREE_ORDER });
    }
    let len = n - 2;
    let count = (n as u64).pow(len as u32);
    let mut seq = vec![0usize; len];
    let mut first = true;
    Ok((0..count).map(move |_| {
        if !first {
            // Odometer step.
            for digit in seq.iter_mut().rev() {
                *digit += 1;
                if *digit < n {
                    break;
                }
                *digit = 0;
            }
        }
        first = false;
        prufer_decode(&seq)
    }))
}

/// Seeded random labeled trees: order uniform in `2..=n_max`, then a uniform
/// Prüfer sequence. The generator is ChaCha8 seeded with `seed_from_u64(seed)`.
pub struct RandomTrees {
    rng: ChaCha8Rng,
    n_min: usize,
    n_max: usize,
    remaining: usize,
}

impl RandomTrees {
    pub fn new(n_max: usize, count: usize, seed: u64) -> Self {
        RandomTrees::between(2, n_max, count, seed)
    }

    /// Orders uniform in `n_min..=n_max` instead of `2..=n_max`.
    pub fn between(n_min: usize, n_max: usize, count: usize, seed: u64) -> Self {
        assert!(2 <= n_min && n_min <= n_max, "random trees need 2 <= n_min <= n_max");
        RandomTrees { rng: ChaCha8Rng::seed_from_u64(seed), n_min, n_max, remaining: count }
    }
}

impl Iterator for RandomTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let n = self.rng.gen_range(self.n_min..=self.n_max);
        let seq: Vec<usize> = (0..n - 2).map(|_| self.rng.gen_range(0..n)).collect();
        Some(prufer_decode(&seq))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

pub fn random_trees(n_max: usize, count: usize, seed: u64) -> RandomTrees {
    RandomTrees::new(n_max, count, seed)
}

/// One graph per line; blank lines, `#` comments and a `>>graph6<<` header are skipped.
pub fn read_graph6_file(path: PathBuf) -> Result<impl Iterator<Item = Result<Graph, HarnessError>> + Send, HarnessError> {
    let file = File::open(&path).map_err(|source| HarnessError::Io { path: path.clone(), source })?;
    Ok(graph6_lines(BufReader::new(file), path))
}

pub(crate) fn graph6_lines<R: BufRead + Send>(
    reader: R,
    path: PathBuf,
) -> impl Iterator<Item = Result<Graph, HarnessError>> + Send {
    reader.lines().enumerate().filter_map(move |(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(source) => return Some(Err(HarnessError::Io { path: path.clone(), source })),
        };
        let text = line.trim();
        let text = text.strip_prefix(FILE_HEADER).unwrap_or(text);
        if text.is_empty() || text.starts_with('#') {
            return None;
        }
        Some(parse_graph6(text.as_bytes()).map_err(|source| HarnessError::Parse {
            path: path.clone(),
            line: i + 1,
            source,
        }))
    })
}
