use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ke_square_core::harness::fixtures::fixtures;
use ke_square_core::harness::{verify, Check, CorpusKind, CorpusSpec, VerificationReport};
use ke_square_core::{
    classify, invariant_chain, parse_edge_lists, parse_graph6, to_edge_list, to_graph6, ClassificationReport, Graph,
};
use serde::Serialize;

/// König-Egerváry properties of graphs and their squares.
#[derive(Debug, Parser)]
#[command(name = "ke-square", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input encoding.
    #[arg(long, value_enum, default_value_t = Format::Graph6, global = true)]
    format: Format,

    /// `structured` prints one JSON object per line.
    #[arg(long, value_enum, default_value_t = Output::Human, global = true)]
    output: Output,

    /// Worker threads for `verify`.
    #[arg(long, env = "KE_SQUARE_JOBS", global = true)]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report every invariant and recognizer for each input graph.
    Classify {
        /// Input file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print the square of each input graph in the input encoding.
    Square {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print alpha(G²), theta(G²), gamma, i, alpha, theta for each input graph.
    Invariants {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Run verification sweeps over a corpus. Exits 1 on any violation.
    Verify {
        #[arg(long, value_enum, default_value_t = Corpus::ExhaustiveConnected)]
        corpus: Corpus,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Random trees to draw.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated check names; all checks when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// graph6 file for `--corpus graph6-file`.
        input: Option<PathBuf>,
    },
    /// Print the figure fixtures as graph6 and edge lists.
    Fixtures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Corpus {
    ExhaustiveConnected,
    ExhaustiveTrees,
    RandomTrees,
    Graph6File,
    Fixtures,
}

/// Input problems: reported on stderr, exit code 2.
#[derive(Debug)]
struct InputError(anyhow::Error);

fn read_input(input: &str) -> Result<String> {
    let mut text = String::new();
    if input == "-" {
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        text = fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    }
    Ok(text)
}

fn parse_graphs(text: &str, format: Format) -> Result<Vec<Graph>> {
    match format {
        Format::Edgelist => Ok(parse_edge_lists(text)?),
        Format::Graph6 => {
            let mut graphs = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim_end_matches('\r');
                if line.trim().is_empty() || line.starts_with('#') || line == ">>graph6<<" {
                    continue;
                }
                let g = parse_graph6(line.as_bytes()).with_context(|| format!("line {}", i + 1))?;
                graphs.push(g);
            }
            Ok(graphs)
        }
    }
}

fn load(input: &str, format: Format) -> std::result::Result<Vec<Graph>, InputError> {
    read_input(input).and_then(|t| parse_graphs(&t, format)).map_err(InputError)
}

fn encode(g: &Graph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Graph6 => to_graph6(g)? + "\n",
        Format::Edgelist => to_edge_list(g),
    })
}

fn yes(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn pairs(edges: &[(usize, usize)]) -> String {
    let list: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{{{}}}", list.join(", "))
}

fn set(vs: &[usize]) -> String {
    let list: Vec<String> = vs.iter().map(usize::to_string).collect();
    format!("{{{}}}", list.join(", "))
}

fn label(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("n={} m={}", g.order(), g.size()))
}

#[derive(Serialize)]
struct ClassifyRecord<'a> {
    graph6: Option<String>,
    #[serde(flatten)]
    report: &'a ClassificationReport,
    equivalence_consistent: Option<bool>,
}

fn human_report(out: &mut impl Write, g: &Graph, r: &ClassificationReport) -> io::Result<()> {
    writeln!(out, "graph {} (n={}, m={}, connected={})", label(g), r.n, r.m, yes(r.connected))?;
    writeln!(out, "  alpha={} mu={} alpha(G2)={} mu(G2)={}", r.alpha, r.mu, r.alpha_sq, r.mu_sq)?;
    writeln!(out, "  KE: {}  square KE: {}  square-stable: {}", yes(r.ke), yes(r.ke_square), yes(r.square_stable))?;
    writeln!(out, "  perfect matching: {}", yes(r.perfect_matching))?;
    match &r.pendant_pm {
        Some(m) => writeln!(out, "  pendant perfect matching: {}", pairs(m.edges()))?,
        None => writeln!(out, "  pendant perfect matching: none")?,
    }
    writeln!(out, "  well-covered: {}  very well-covered: {}  leaves: {}", yes(r.well_covered), yes(r.very_well_covered), r.leaf_count)?;
    writeln!(out, "  maximum stable set: {}", set(&r.stability_system.vertices))?;
    match &r.distance3_system {
        Some(s) => writeln!(out, "  pairwise distance >= 3 stable set: {}", set(&s.vertices))?,
        None => writeln!(out, "  pairwise distance >= 3 stable set: none of size alpha")?,
    }
    if let Some(d) = &r.ke_decomposition {
        writeln!(out, "  KE decomposition: S={} H={} M={}", set(&d.s.vertices), set(&d.h_vertices), pairs(d.matching.edges()))?;
    }
    let [a, b, c, e] = r.equivalence_conditions();
    let status = match r.equivalence_consistent() {
        Some(true) => "consistent",
        Some(false) => "INCONSISTENT",
        None => "not applicable",
    };
    writeln!(out, "  four conditions: [{}, {}, {}, {}] {status}", yes(a), yes(b), yes(c), yes(e))
}

fn human_verify(out: &mut impl Write, r: &VerificationReport) -> io::Result<()> {
    let verdict = if r.passed() { "ok" } else { "VIOLATED" };
    write!(
        out,
        "{} on {}: {verdict}, {} graphs, premise held on {}, {} violations",
        r.check_name, r.corpus, r.graphs_tested, r.premise_held, r.violation_count
    )?;
    if let Some(w) = r.non_converse_witnesses {
        write!(out, ", {w} non-converse witnesses")?;
    }
    writeln!(out, " ({} ms)", r.elapsed.as_millis())?;
    for v in &r.violations {
        writeln!(out, "  {}: expected {}; observed {}", v.graph6, v.expected, v.observed)?;
    }
    Ok(())
}

fn corpus_spec(
    corpus: Corpus,
    n_min: usize,
    n_max: usize,
    samples: usize,
    seed: u64,
    input: Option<PathBuf>,
) -> Result<CorpusSpec> {
    let kind = match corpus {
        Corpus::ExhaustiveConnected => CorpusKind::ExhaustiveConnected,
        Corpus::ExhaustiveTrees => CorpusKind::ExhaustiveTrees,
        Corpus::RandomTrees => CorpusKind::RandomTrees,
        Corpus::Fixtures => CorpusKind::Fixtures,
        Corpus::Graph6File => match input {
            Some(p) => CorpusKind::Graph6File(p),
            None => bail!("--corpus graph6-file needs an input path"),
        },
    };
    let spec = CorpusSpec::new(kind, n_min, n_max).with_samples(samples, seed);
    spec.validate()?;
    Ok(spec)
}

fn run(cli: Cli) -> std::result::Result<ExitCode, InputError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the worker pool")
            .map_err(InputError)?;
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let io_err = |e: io::Error| InputError(e.into());
    let structured = cli.output == Output::Structured;
    let mut code = ExitCode::SUCCESS;

    match cli.command {
        Command::Classify { input } => {
            for g in load(&input, cli.format)? {
                let r = classify(&g);
                if structured {
                    let rec = ClassifyRecord { graph6: to_graph6(&g).ok(), report: &r, equivalence_consistent: r.equivalence_consistent() };
                    writeln!(out, "{}", serde_json::to_string(&rec).expect("report serializes")).map_err(io_err)?;
                } else {
                    human_report(&mut out, &g, &r).map_err(io_err)?;
                }
            }
        }
        Command::Square { input } => {
            for g in load(&input, cli.format)? {
                let text = encode(&g.square(), cli.format).map_err(InputError)?;
                out.write_all(text.as_bytes()).map_err(io_err)?;
            }
        }
        Command::Invariants { input } => {
            for g in load(&input, cli.format)? {
                match invariant_chain(&g) {
                    Ok(b) if structured => {
                        writeln!(out, "{}", serde_json::to_string(&b).expect("bundle serializes")).map_err(io_err)?
                    }
                    Ok(b) => writeln!(
                        out,
                        "{}: alpha(G2)={} theta(G2)={} gamma={} i={} alpha={} theta={}",
                        label(&g),
                        b.alpha_g2,
                        b.theta_g2,
                        b.gamma,
                        b.i_dom,
                        b.alpha,
                        b.theta
                    )
                    .map_err(io_err)?,
                    Err(e) => {
                        eprintln!("{e}");
                        code = ExitCode::from(1);
                    }
                }
            }
        }
        Command::Verify { corpus, n_min, n_max, samples, seed, checks, input } => {
            let spec = corpus_spec(corpus, n_min, n_max, samples, seed, input).map_err(InputError)?;
            let checks: Vec<Check> = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks
                    .iter()
                    .map(|c| c.trim().parse::<Check>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| InputError(e.into()))?
            };
            for check in checks {
                let r = verify(check, &spec).map_err(|e| InputError(e.into()))?;
                if structured {
                    writeln!(out, "{}", r.to_json()).map_err(io_err)?;
                } else {
                    human_verify(&mut out, &r).map_err(io_err)?;
                }
                if !r.passed() {
                    code = ExitCode::from(1);
                }
            }
        }
        Command::Fixtures => {
            for (name, g) in fixtures() {
                let g6 = to_graph6(&g).map_err(|e| InputError(e.into()))?;
                if structured {
                    let edges: Vec<(usize, usize)> = g.edges().collect();
                    let rec = serde_json::json!({ "name": name, "graph6": g6, "n": g.order(), "edges": edges });
                    writeln!(out, "{rec}").map_err(io_err)?;
                } else {
                    write!(out, "# {name}\n{g6}\n{}", to_edge_list(&g)).map_err(io_err)?;
                }
            }
        }
    }
    out.flush().map_err(io_err)?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
