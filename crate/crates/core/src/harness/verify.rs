use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use super::report::{VerificationReport, Violation};
use super::{CorpusSpec, HarnessError};
use crate::chain::invariant_values;
use crate::edgelist::to_edge_list;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::matching::mu;
use crate::recognizers::{classify, is_well_covered, pendant_perfect_matching, EquivalenceStatus};
use crate::stable::alpha;

/// Graphs handed to the worker pool at a time.
const BATCH: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    /// The four conditions on `G` and `G²` are equivalent.
    TheoremMain,
    /// Square-stable graphs have `alpha <= mu`.
    LemmaSquareStable,
    /// With `G²` König-Egerváry: `alpha(G)=alpha(G²)`, `mu(G)=mu(G²)`, and
    /// "`G` KE with a perfect matching" agree (and all hold).
    PropositionSquareKe,
    /// `G²` KE implies `G` square-stable, KE, with a perfect matching; even
    /// cycles witness that the converse fails.
    Necessity,
    /// `alpha(G²) <= theta(G²) <= gamma <= i <= alpha <= theta`, with equality
    /// throughout when `alpha(G²)=alpha(G)` or `theta(G²)=theta(G)`.
    Chain,
    /// For trees: `T²` KE, `T` well-covered, and a pendant perfect matching agree.
    TreeCorollary,
    /// graph6 encoding round-trips.
    Graph6RoundTrip,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::TheoremMain,
        Check::LemmaSquareStable,
        Check::PropositionSquareKe,
        Check::Necessity,
        Check::Chain,
        Check::TreeCorollary,
        Check::Graph6RoundTrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::TheoremMain => "theorem_main",
            Check::LemmaSquareStable => "lemma_square_stable",
            Check::PropositionSquareKe => "proposition_square_ke",
            Check::Necessity => "necessity",
            Check::Chain => "chain",
            Check::TreeCorollary => "tree_corollary",
            Check::Graph6RoundTrip => "graph6_roundtrip",
        }
    }
}

impl FromStr for Check {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| HarnessError::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub expected: String,
    pub observed: String,
}

/// Outcome of one check on one graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Probe {
    /// The statement was not vacuous on this graph.
    pub premise: bool,
    pub discrepancy: Option<Discrepancy>,
    /// KE with a perfect matching, square not KE.
    pub non_converse: bool,
    /// The graph is `C4` or `C6`.
    pub even_cycle: bool,
}

impl Probe {
    fn vacuous() -> Self {
        Probe::default()
    }

    fn held(discrepancy: Option<Discrepancy>) -> Self {
        Probe { premise: true, discrepancy, ..Probe::default() }
    }
}

fn mismatch(expected: &str, observed: String) -> Option<Discrepancy> {
    Some(Discrepancy { expected: expected.to_string(), observed })
}

fn is_short_even_cycle(g: &Graph) -> bool {
    matches!(g.order(), 4 | 6) && (0..g.order()).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// Runs one check on one graph. The caller is responsible for the
/// connected / `n >= 2` precondition.
pub fn probe(check: Check, g: &Graph) -> Probe {
    let n = g.order();
    match check {
        Check::TheoremMain => {
            let r = classify(g);
            let [a, b, c, d] = r.equivalence_conditions();
            Probe::held(match r.equivalence {
                EquivalenceStatus::Inconsistent => mismatch(
                    "the four conditions agree",
                    format!("square KE={a}, square-stable KE={b}, pendant perfect matching={c}, very well-covered with alpha leaves={d}"),
                ),
                _ => None,
            })
        }
        Check::LemmaSquareStable => {
            let a = alpha(g);
            if a != alpha(&g.square()) {
                return Probe::vacuous();
            }
            let m = mu(g);
            Probe::held(if a > m { mismatch("alpha <= mu", format!("alpha={a} mu={m}")) } else { None })
        }
        Check::PropositionSquareKe => {
            let sq = g.square();
            let (a, a2, m, m2) = (alpha(g), alpha(&sq), mu(g), mu(&sq));
            if a2 + m2 != n {
                return Probe::vacuous();
            }
            let stmts = [a == a2, m == m2, a + m == n && 2 * m == n];
            Probe::held(if stmts != [true; 3] {
                mismatch(
                    "alpha=alpha_sq, mu=mu_sq, KE with perfect matching all hold",
                    format!("{stmts:?} (alpha={a} alpha_sq={a2} mu={m} mu_sq={m2})"),
                )
            } else {
                None
            })
        }
        Check::Necessity => {
            let sq = g.square();
            let (a, a2, m, m2) = (alpha(g), alpha(&sq), mu(g), mu(&sq));
            let (ke, pm, sq_ke) = (a + m == n, 2 * m == n, a2 + m2 == n);
            let mut p = Probe { even_cycle: is_short_even_cycle(g), non_converse: ke && pm && !sq_ke, ..Probe::default() };
            if sq_ke {
                p.premise = true;
                let ok = a == a2 && ke && pm && a == m && m == m2;
                if !ok {
                    p.discrepancy = mismatch(
                        "square-stable, KE, perfect matching, alpha=alpha_sq=mu=mu_sq",
                        format!("alpha={a} alpha_sq={a2} mu={m} mu_sq={m2} n={n}"),
                    );
                }
            }
            p
        }
        Check::Chain => {
            let v = invariant_values(g);
            let ordered = v.windows(2).all(|w| w[0] <= w[1]);
            let equal_premise = v[0] == v[4] || v[1] == v[5];
            let all_equal = v.iter().all(|&x| x == v[0]);
            let d = if !ordered {
                mismatch("alpha_sq <= theta_sq <= gamma <= i <= alpha <= theta", format!("{v:?}"))
            } else if equal_premise && !all_equal {
                mismatch("all six equal", format!("{v:?}"))
            } else {
                None
            };
            Probe::held(d)
        }
        Check::TreeCorollary => {
            if !g.is_tree() {
                return Probe::vacuous();
            }
            let sq = g.square();
            let stmts = [
                alpha(&sq) + mu(&sq) == n,
                is_well_covered(g),
                pendant_perfect_matching(g).is_some(),
            ];
            Probe::held(if stmts.iter().any(|&s| s != stmts[0]) {
                mismatch(
                    "square KE, well-covered, pendant perfect matching agree",
                    format!("{stmts:?}"),
                )
            } else {
                None
            })
        }
        Check::Graph6RoundTrip => Probe::held(match to_graph6(g) {
            Ok(s) => match parse_graph6(s.as_bytes()) {
                Ok(back) if back == *g => None,
                Ok(back) => mismatch("identical graph", format!("{back:?}")),
                Err(e) => mismatch("parse succeeds", e.to_string()),
            },
            Err(e) => mismatch("encode succeeds", e.to_string()),
        }),
    }
}

/// Re-runs one check on a single graph, e.g. one re-parsed from a certificate.
pub fn check_graph(check: Check, g: &Graph) -> Result<(), Discrepancy> {
    match probe(check, g).discrepancy {
        Some(d) => Err(d),
        None => Ok(()),
    }
}

fn certificate(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| to_edge_list(g))
}

/// Streams the corpus through `f` on the current rayon pool.
///
/// Only connected graphs with at least two vertices are tested. Results are
/// merged in corpus order, so reports do not depend on the worker count.
pub fn verify_with<F>(check_name: &str, corpus: &CorpusSpec, f: F) -> Result<VerificationReport, HarnessError>
where
    F: Fn(&Graph) -> Probe + Sync,
{
    run(check_name, corpus, f, false)
}

fn run<F>(check_name: &str, corpus: &CorpusSpec, f: F, require_non_converse: bool) -> Result<VerificationReport, HarnessError>
where
    F: Fn(&Graph) -> Probe + Sync,
{
    let start = Instant::now();
    let mut report = VerificationReport::new(check_name, corpus.kind.name(), corpus.seed);
    let mut non_converse = 0u64;
    let mut cycle_seen: Option<String> = None;
    let mut stream = corpus.graphs()?;
    loop {
        let batch: Vec<Graph> = stream.by_ref().take(BATCH).collect::<Result<_, _>>()?;
        if batch.is_empty() {
            break;
        }
        let probes: Vec<Option<Probe>> = batch
            .par_iter()
            .map(|g| (g.order() >= 2 && g.is_connected()).then(|| f(g)))
            .collect();
        for (g, p) in batch.iter().zip(probes) {
            let Some(p) = p else { continue };
            report.graphs_tested += 1;
            report.premise_held += u64::from(p.premise);
            non_converse += u64::from(p.non_converse);
            if p.even_cycle && cycle_seen.is_none() {
                cycle_seen = Some(certificate(g));
            }
            if let Some(d) = p.discrepancy {
                report.record(Violation { graph6: certificate(g), expected: d.expected, observed: d.observed });
            }
        }
    }
    if require_non_converse {
        report.non_converse_witnesses = Some(non_converse);
        if let (Some(cycle), 0) = (cycle_seen, non_converse) {
            report.record(Violation {
                graph6: cycle,
                expected: "a KE graph with a perfect matching whose square is not KE".into(),
                observed: "none in a corpus containing C4 or C6".into(),
            });
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

pub fn verify(check: Check, corpus: &CorpusSpec) -> Result<VerificationReport, HarnessError> {
    run(check.name(), corpus, |g| probe(check, g), check == Check::Necessity)
}

pub fn verify_theorem_main(corpus: &CorpusSpec) -> Result<VerificationReport, HarnessError> {
    verify(Check::TheoremMain, corpus)
}

pub fn verify_lemma_square_stable(corpus: &CorpusSpec) -> Result<VerificationReport, HarnessError> {
    verify(Check::LemmaSquareStable, corpus)
}

pub fn verify_proposition_square_ke(corpus: &CorpusSpec) -> Result<VerificationReport, HarnessError> {
    verify(Check::PropositionSquareKe, corpus)
}

pub fn verify_necessity(corpus: &CorpusSpec) -> Result<VerificationReport, HarnessError> {
    verify(Check::Necessity, corpus)
}

pub fn verify_chain(corpus: &CorpusSpec) -> Result<VerificationReport, HarnessError> {
    verify(Check::Chain, corpus)
}

pub fn verify_tree_corollary(corpus: &CorpusSpec) -> Result<VerificationReport, HarnessError> {
    verify(Check::TreeCorollary, corpus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixtures::{fig1, fig3};
    use crate::harness::CorpusKind;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn lemma_examples() {
        let p = probe(Check::LemmaSquareStable, &fig1());
        assert!(p.premise && p.discrepancy.is_none());
        let p = probe(Check::LemmaSquareStable, &fig3());
        assert!(p.premise && p.discrepancy.is_none());
        assert!(alpha(&fig3()) < mu(&fig3()));
    }

    #[test]
    fn proposition_examples() {
        assert!(probe(Check::PropositionSquareKe, &Graph::path(4)).premise);
        assert!(!probe(Check::PropositionSquareKe, &Graph::cycle(6)).premise);
    }

    #[test]
    fn necessity_examples() {
        let c4 = probe(Check::Necessity, &Graph::cycle(4));
        assert!(c4.non_converse && c4.even_cycle && !c4.premise);
        let c5 = probe(Check::Necessity, &Graph::cycle(5));
        assert!(!c5.non_converse && !c5.premise);
    }

    #[test]
    fn chain_and_tree_examples() {
        assert!(probe(Check::Chain, &Graph::path(4)).discrepancy.is_none());
        assert!(probe(Check::Chain, &Graph::star(3)).discrepancy.is_none());
        assert!(probe(Check::TreeCorollary, &Graph::path(4)).premise);
        assert!(probe(Check::TreeCorollary, &Graph::star(3)).discrepancy.is_none());
        assert!(!probe(Check::TreeCorollary, &Graph::cycle(4)).premise);
    }

    #[test]
    fn fixtures_pass_every_check() {
        let corpus = CorpusSpec::new(CorpusKind::Fixtures, 2, 2);
        for c in Check::ALL {
            let r = verify(c, &corpus).unwrap();
            assert!(r.passed(), "{}: {:?}", c.name(), r.violations);
            assert_eq!(r.graphs_tested, 9);
        }
        assert!(verify_necessity(&corpus).unwrap().non_converse_witnesses.unwrap() > 0);
    }

    #[test]
    fn missing_non_converse_is_reported() {
        // A corpus of only C4 where the probe pretends C4 is not a witness.
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c4.g6");
        let c4 = to_graph6(&Graph::cycle(4)).unwrap();
        std::fs::write(&path, format!("{c4}\n")).unwrap();
        let corpus = CorpusSpec::new(CorpusKind::Graph6File(path), 2, 2);
        let r = run("necessity", &corpus, |g| Probe { non_converse: false, ..probe(Check::Necessity, g) }, true).unwrap();
        assert_eq!(r.violation_count, 1);
        assert_eq!(r.violations[0].graph6, c4);
    }
}
