//! Command-line front-end. Exit codes are a stable contract:
//! 0 = success / verified, 1 = verification negative, 2 = usage or
//! validation error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gkod::arith::FactoredInt;
use gkod::db::{self, GroupDatabase};
use gkod::graph::{self, DegreePattern};
use gkod::orders::{self, CoincidencePair};
use gkod::report;
use gkod::search::{self, SearchProblem, Verdict};
use gkod::spectrum::Spectrum;

#[derive(Parser)]
#[command(
    name = "gkod",
    about = "Prime graphs, degree patterns, and order/degree-pattern characterization \
             of finite simple groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the prime graph of a group from its spectrum and factored order
    Graph {
        /// Maximal element orders, comma-separated (e.g. 24,52,60,63)
        #[arg(long)]
        mu: String,
        /// Factored order (e.g. "2^7 3^4 5^6 7 13")
        #[arg(long)]
        order: String,
        /// Also write the graph in DOT format to this path
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Enumerate all labeled graphs on the given primes with the given
    /// degree pattern
    Enumerate {
        /// Vertex primes, comma-separated ascending (e.g. 2,3,5,7,13)
        #[arg(long)]
        primes: String,
        /// Degree pattern, comma-separated (e.g. 3,3,2,1,1)
        #[arg(long)]
        pattern: String,
    },
    /// Run the characterization pipeline for a target order and degree
    /// pattern
    Search {
        /// Factored target order
        #[arg(long)]
        order: String,
        /// Degree pattern, comma-separated
        #[arg(long)]
        pattern: String,
        /// Database files merged in order (defaults to the bundled data)
        #[arg(long)]
        db: Vec<PathBuf>,
    },
    /// Cross-check database records against order formulas and structural
    /// invariants
    Verify {
        /// Database files merged in order (defaults to the bundled data)
        #[arg(long)]
        db: Vec<PathBuf>,
    },
    /// Print characterization multiplicities and equal-order coincidences
    Census,
}

fn load_or_bundled(paths: &[PathBuf]) -> Result<GroupDatabase, String> {
    if paths.is_empty() {
        Ok(db::bundled_search_db())
    } else {
        GroupDatabase::load_many(paths).map_err(|e| e.to_string())
    }
}

fn parse_primes(text: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        out.push(part.parse::<u64>().map_err(|_| format!("not an integer: `{part}`"))?);
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Graph { mu, order, dot } => {
            let order = FactoredInt::parse(&order).map_err(|e| e.to_string())?;
            let mu = Spectrum::parse(&mu).map_err(|e| e.to_string())?;
            let g = graph::build_gk(&order, &mu).map_err(|e| e.to_string())?;
            print!("{}", report::render_graph(&g));
            if let Some(path) = dot {
                std::fs::write(&path, g.to_dot())
                    .map_err(|e| format!("writing {}: {e}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { primes, pattern } => {
            let primes = parse_primes(&primes)?;
            let pattern = DegreePattern::parse(&pattern).map_err(|e| e.to_string())?;
            let graphs =
                graph::enumerate_graphs(&primes, &pattern).map_err(|e| e.to_string())?;
            for (i, g) in graphs.iter().enumerate() {
                let edges = g
                    .edges()
                    .iter()
                    .map(|(p, q)| format!("{p}-{q}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                println!("graph {}: {}", i + 1, if edges.is_empty() { "(none)".into() } else { edges });
            }
            println!("count = {}", graphs.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { order, pattern, db } => {
            let order = FactoredInt::parse(&order).map_err(|e| e.to_string())?;
            let pattern = DegreePattern::parse(&pattern).map_err(|e| e.to_string())?;
            let problem = SearchProblem::new(order, pattern).map_err(|e| e.to_string())?;
            let database = load_or_bundled(&db)?;
            let report = search::od_verify(&problem, &database).map_err(|e| e.to_string())?;
            print!("{}", report::render_search(&report));
            Ok(if report.verdict == Verdict::UniqueCandidateEqualOrder {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify { db: paths } => {
            let reports = if paths.is_empty() {
                vec![
                    ("search data", db::bundled_search_db().verify_consistency()),
                    ("census data", db::bundled_census_db().verify_consistency()),
                ]
            } else {
                vec![(
                    "supplied data",
                    GroupDatabase::load_many(&paths)
                        .map_err(|e| e.to_string())?
                        .verify_consistency(),
                )]
            };
            let mut all_pass = true;
            for (label, rep) in &reports {
                println!("[{label}]");
                print!("{}", report::render_consistency(rep));
                all_pass &= rep.passed();
            }
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Census => {
            let census = db::bundled_census_db();
            let table2 = db::bundled_table2_db();
            let mut pairs = orders::coincidence_report(&table2);
            for extra in orders::coincidence_report(&census) {
                let dup = pairs.iter().any(|p: &CoincidencePair| {
                    (p.first == extra.first && p.second == extra.second)
                        || (p.first == extra.second && p.second == extra.first)
                });
                if !dup {
                    pairs.push(extra);
                }
            }
            print!("{}", report::render_census(&census, &pairs));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
