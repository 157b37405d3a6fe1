mod table1;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use oddcol::constructions::{
    circular_clique, cycle, fixture, generalized_mycielski, odd_k32, odd_k4, CircularCliqueSpec,
    OddK32Spec, OddK4Spec,
};
use oddcol::graph::{from_graph6, girth, odd_girth, to_graph6};
use oddcol::hom::{
    chromatic_number, circular_chromatic_number, compute_core, exists_v_special,
    extend_v_special, HomTarget,
};
use oddcol::search::{
    claim_rules_up_to_14, eta_search, order_independent_rules, rediscover_order15, PruneRule,
    SearchConfig, SearchOptions, SearchReport,
};
use oddcol::witness::{find_odd_k32_within, find_odd_k4_within};
use oddcol::{Budget, Error, Graph};
use serde_json::json;

/// Odd-cycle colourings of small graphs.
///
/// Graph arguments are files holding graph6 (first non-empty line), `-`
/// for standard input, or a graph6 string given directly.
#[derive(Parser)]
#[command(name = "oddcol", version)]
struct Cli {
    /// Time budget in seconds for the long-running commands.
    #[arg(long, global = true, env = "ODDCOL_BUDGET_SECS")]
    budget_secs: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a homomorphism from SOURCE to TARGET as a JSON array, or NONE
    /// (exit status 1).
    Hom { source: String, target: String },
    /// Length of a shortest odd cycle, or inf.
    OddGirth { graph: String },
    /// Length of a shortest cycle, or inf.
    Girth { graph: String },
    /// graph6 of the core.
    Core { graph: String },
    /// Chromatic number.
    Chi { graph: String },
    /// Circular chromatic number as p/q.
    ChiC { graph: String },
    /// Print a graph in graph6.
    Build {
        #[command(subcommand)]
        family: Family,
    },
    /// Look for an odd-K4 or odd-K3² subgraph; prints JSON or NONE (exit 1).
    Detect { kind: DetectKind, graph: String },
    /// A v-special colouring around VERTEX and the C5-colouring it gives,
    /// or NONE (exit 1).
    VSpecial { graph: String, vertex: usize },
    /// Search for the smallest graphs of odd-girth 2k+1 with no
    /// homomorphism to C_{2l+1}. Prints one JSON record per order, then a
    /// summary record.
    SearchEta {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        max_n: usize,
        /// Prune with the structural claims about a smallest odd-girth-7
        /// counterexample to C5-colourability. The result is then
        /// conditional on those claims.
        #[arg(long)]
        assume_minimal: bool,
        /// Comma-separated rule names; defaults to every claim valid at
        /// this order when --assume-minimal is given.
        #[arg(long, value_delimiter = ',')]
        rules: Vec<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Growth-tree depth at which work is split into subtrees.
        #[arg(long, default_value_t = 3)]
        split_depth: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Search for the odd-girth-7 graphs on 15 vertices with no
    /// homomorphism to C5; prints their graph6.
    Rediscover15 {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Recompute the desk-scale cells of the table of known values and
    /// compare.
    Table1 {
        /// Skip the searches that take more than a few seconds.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    Mycielski { k: usize },
    OddK4 { a: usize, b: usize, c: usize },
    /// Three odd cycle lengths, then three path lengths.
    OddK32 {
        #[arg(num_args = 6)]
        lengths: Vec<usize>,
    },
    CircularClique { p: usize, q: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Fixture { name: String },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum DetectKind {
    OddK4,
    OddK32,
}

/// Why a command failed; decides the exit status.
enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::BudgetExceeded => Failure::Budget("budget exceeded".into()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn read_graph(arg: &str) -> Result<Graph, Failure> {
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else if Path::new(arg).exists() {
        std::fs::read_to_string(arg)?
    } else {
        arg.to_string()
    };
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Failure::Usage(format!("{arg}: no graph6 line")))?;
    Ok(from_graph6(line)?)
}

fn budget(secs: Option<f64>) -> Result<Budget, Failure> {
    match secs {
        None => Ok(Budget::unlimited()),
        Some(s) if s.is_finite() && s >= 0.0 => Ok(Budget::with_time(Duration::from_secs_f64(s))),
        Some(s) => Err(Failure::Usage(format!("invalid budget {s}"))),
    }
}

fn out(line: impl std::fmt::Display) {
    let mut stdout = io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = writeln!(stdout, "{line}");
}

fn run(cli: Cli) -> Outcome {
    let mut budget = budget(cli.budget_secs)?;
    match cli.command {
        Command::Hom { source, target } => {
            let (g, h) = (read_graph(&source)?, read_graph(&target)?);
            match HomTarget::new(&h).find_within(&g, &mut budget)? {
                Some(m) => {
                    out(serde_json::to_string(&m).expect("maps serialize"));
                    Ok(0)
                }
                None => {
                    out("NONE");
                    Ok(1)
                }
            }
        }
        Command::OddGirth { graph } => {
            out(odd_girth(&read_graph(&graph)?));
            Ok(0)
        }
        Command::Girth { graph } => {
            out(girth(&read_graph(&graph)?));
            Ok(0)
        }
        Command::Core { graph } => {
            out(to_graph6(&compute_core(&read_graph(&graph)?)));
            Ok(0)
        }
        Command::Chi { graph } => {
            out(chromatic_number(&read_graph(&graph)?));
            Ok(0)
        }
        Command::ChiC { graph } => {
            out(circular_chromatic_number(&read_graph(&graph)?)?);
            Ok(0)
        }
        Command::Build { family } => {
            let g = match family {
                Family::Mycielski { k } => generalized_mycielski(k)?,
                Family::OddK4 { a, b, c } => odd_k4(OddK4Spec::new(a, b, c))?,
                Family::OddK32 { lengths } => odd_k32(OddK32Spec::new(
                    [lengths[0], lengths[1], lengths[2]],
                    [lengths[3], lengths[4], lengths[5]],
                ))?,
                Family::CircularClique { p, q } => circular_clique(CircularCliqueSpec::new(p, q)?)?,
                Family::Cycle { n } => cycle(n)?,
                Family::Complete { n } => oddcol::constructions::complete(n)?,
                Family::Fixture { name } => fixture(&name)?,
            };
            out(to_graph6(&g));
            Ok(0)
        }
        Command::Detect { kind, graph } => {
            let g = read_graph(&graph)?;
            let found = match kind {
                DetectKind::OddK4 => find_odd_k4_within(&g, &mut budget)?.map(|w| json!(w)),
                DetectKind::OddK32 => find_odd_k32_within(&g, &mut budget)?.map(|w| json!(w)),
            };
            match found {
                Some(w) => {
                    out(w);
                    Ok(0)
                }
                None => {
                    out("NONE");
                    Ok(1)
                }
            }
        }
        Command::VSpecial { graph, vertex } => {
            let g = read_graph(&graph)?;
            match exists_v_special(&g, vertex)? {
                Some(col) => {
                    let map = extend_v_special(&g, &col)?;
                    out(json!({"colouring": col, "c5_map": map}));
                    Ok(0)
                }
                None => {
                    out("NONE");
                    Ok(1)
                }
            }
        }
        Command::SearchEta {
            k,
            l,
            max_n,
            assume_minimal,
            rules,
            jobs,
            split_depth,
            checkpoint,
        } => {
            let mut parsed = Vec::new();
            for r in &rules {
                parsed.push(r.parse::<PruneRule>()?);
            }
            if assume_minimal && parsed.is_empty() {
                parsed = if max_n <= 14 {
                    claim_rules_up_to_14()
                } else {
                    order_independent_rules()
                };
            }
            let mut cfg = SearchConfig::new(k, l, max_n)
                .with_rules(parsed)
                .with_parallel_width(split_depth);
            cfg.assume_minimal = assume_minimal;
            if !cfg.claim_rules().is_empty() && !assume_minimal {
                return Err(Failure::Usage(
                    "claim rules need --assume-minimal: they hold only for a smallest counterexample"
                        .into(),
                ));
            }
            let opts = SearchOptions {
                budget,
                jobs,
                checkpoint,
                progress: None,
            };
            let report = eta_search(&cfg, &opts)?;
            print_report(&report);
            Ok(if report.complete { 0 } else { 3 })
        }
        Command::Rediscover15 { jobs, checkpoint } => {
            let opts = SearchOptions {
                budget,
                jobs,
                checkpoint,
                progress: None,
            };
            let report = rediscover_order15(&opts)?;
            for w in &report.witnesses {
                out(w);
            }
            out(json!({
                "complete": report.complete,
                "count": report.witnesses.len(),
                "assumption": report.assumption,
                "wall_seconds": report.wall_seconds,
            }));
            Ok(if report.complete { 0 } else { 3 })
        }
        Command::Table1 { quick } => Ok(table1::run(quick, budget)?),
    }
}

/// One JSON line per order, then the summary.
fn print_report(r: &SearchReport) {
    for o in &r.orders {
        let listed: Vec<&String> = r
            .witnesses
            .iter()
            .filter(|w| from_graph6(w).map(|g| g.order()) == Ok(o.order))
            .collect();
        out(json!({
            "n": o.order,
            "enumerated": o.enumerated,
            "witnesses": o.witnesses,
            "witness_graph6": listed,
        }));
    }
    out(json!({
        "summary": true,
        "k": r.k,
        "l": r.l,
        "n_max": r.n_max,
        "prune_rules": r.prune_rules,
        "assumption": r.assumption,
        "smallest_witness_order": r.smallest_witness_order,
        "eta_lower_bound_established": r.eta_lower_bound_established,
        "complete": r.complete,
        "subtrees_done": r.subtrees_done,
        "subtrees_total": r.subtrees_total,
        "wall_seconds": r.wall_seconds,
    }));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("oddcol: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("oddcol: {msg}");
            ExitCode::from(3)
        }
    }
}
