//! Command line front end: build actions from JSON specs, compute densities
//! and EKR status, export graphs, run the verification suite, and drive the
//! two searches.

use clap::{Parser, Subcommand};
use derange::density::{self, AnalysisOptions};
use derange::error::Result;
use derange::graph::derangement_graph;
use derange::groupspec::GroupSpec;
use derange::search;
use derange::verify::{self, conjecture, Status};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "derange",
    version,
    about = "Permutation group actions, derangement graphs, and intersection density"
)]
struct Cli {
    /// Worker threads for parallel work (0 uses every core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Refuse to enumerate groups with more elements than this.
    #[arg(long, global = true, default_value_t = derange::action::DEFAULT_ELEMENT_CAP)]
    element_cap: usize,

    /// Cap on maximum-independent-set enumerations.
    #[arg(long, global = true, default_value_t = derange::clique::DEFAULT_MIS_CAP)]
    mis_cap: usize,

    /// Seed for randomized sampling. Sampling only: no verdict depends on it.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group action from a spec and summarize it.
    Build {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Compute the intersection density of the action in a spec.
    Density {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Decide the EKR property, and with --strict the coset property.
    Ekr {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Write the derangement graph of a spec in DOT format.
    Graph {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        dot: PathBuf,
        /// Export the complement instead.
        #[arg(long)]
        complement: bool,
    },
    /// Run verification checks and write a JSON report.
    Verify {
        /// "all" or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Search for transitive groups whose derangement graph is complete
    /// multipartite with the given parameters.
    SearchMultipartite {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        parts: usize,
        /// Search nodes before giving up.
        #[arg(long, default_value_t = derange::search::DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Explore whether the wreath density equals the inner density over the
    /// corpus. Reports measurements and flags disagreements; asserts nothing.
    ConjectureWreath {
        /// Time budget in seconds.
        #[arg(long)]
        budget: u64,
    },
}

#[derive(Serialize)]
struct BuildSummary {
    descriptor: String,
    order: usize,
    degree: usize,
    transitive: bool,
    orbit_sizes: Vec<usize>,
    derangement_count: usize,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct SearchSummary {
    from_cache: bool,
    cache_path: String,
    #[serde(flatten)]
    outcome: search::SearchOutcome,
}

fn main() {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .expect("thread pool is configured once, before any parallel work");
    }
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let opts = AnalysisOptions {
        mis_cap: cli.mis_cap,
        ..AnalysisOptions::default()
    };
    match cli.command {
        Command::Build { spec } => {
            let (action, descriptor) =
                GroupSpec::from_path(&spec)?.build_with_descriptor(cli.element_cap)?;
            let summary = BuildSummary {
                descriptor,
                order: action.order(),
                degree: action.degree(),
                transitive: action.is_transitive(),
                orbit_sizes: action.orbits().iter().map(|o| o.points.len()).collect(),
                derangement_count: action.derangement_ids().len(),
                generators: action
                    .generators()
                    .iter()
                    .map(|g| g.cycle_string())
                    .collect(),
            };
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
            Ok(0)
        }
        Command::Density { spec } => {
            let (action, descriptor) =
                GroupSpec::from_path(&spec)?.build_with_descriptor(cli.element_cap)?;
            let report = density::analyze(&action, &descriptor, &opts)?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(0)
        }
        Command::Ekr { spec, strict } => {
            let (action, descriptor) =
                GroupSpec::from_path(&spec)?.build_with_descriptor(cli.element_cap)?;
            let opts = AnalysisOptions { strict, ..opts };
            let report = density::analyze(&action, &descriptor, &opts)?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(0)
        }
        Command::Graph {
            spec,
            dot,
            complement,
        } => {
            let (action, descriptor) =
                GroupSpec::from_path(&spec)?.build_with_descriptor(cli.element_cap)?;
            let graph = derangement_graph(&action, derange::graph::DEFAULT_GRAPH_CAP)?;
            let (graph, kind) = if complement {
                (graph.complement(), "complement of the derangement graph")
            } else {
                (graph, "derangement graph")
            };
            std::fs::write(&dot, graph.to_dot(&descriptor))?;
            println!(
                "wrote {kind} of {descriptor}: {} vertices, {} edges -> {}",
                graph.vertex_count(),
                graph.edge_count(),
                dot.display()
            );
            Ok(0)
        }
        Command::Verify { suite, report, csv } => {
            let ids: Vec<String> = match suite.trim() {
                "all" => Vec::new(),
                list => list
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect(),
            };
            let cfg = verify::Config {
                element_cap: cli.element_cap,
                mis_cap: cli.mis_cap,
                seed: cli.seed,
                ..verify::Config::default()
            };
            let suite_report = verify::run_suite(&ids, &cfg)?;
            for check in &suite_report.checks {
                let status = match check.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skip => "skip",
                };
                println!(
                    "{:<22} {:<4} ({} instances, {} ms)",
                    check.check_id,
                    status,
                    check.instances.len(),
                    check.runtime_ms
                );
            }
            println!(
                "{} passed, {} failed, {} skipped",
                suite_report.passed, suite_report.failed, suite_report.skipped
            );
            std::fs::write(
                &report,
                serde_json::to_string_pretty(&suite_report).unwrap(),
            )?;
            if let Some(csv_path) = csv {
                std::fs::write(&csv_path, suite_report.to_csv())?;
            }
            Ok(if suite_report.failed == 0 { 0 } else { 1 })
        }
        Command::SearchMultipartite {
            degree,
            parts,
            budget,
        } => {
            let cache_path = search::default_cache_path();
            let (outcome, from_cache) =
                search::search_multipartite_cached(degree, parts, budget, &cache_path)?;
            let summary = SearchSummary {
                from_cache,
                cache_path: cache_path.display().to_string(),
                outcome,
            };
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
            Ok(0)
        }
        Command::ConjectureWreath { budget } => {
            let cfg = verify::Config {
                element_cap: cli.element_cap,
                mis_cap: cli.mis_cap,
                seed: cli.seed,
                ..verify::Config::default()
            };
            let report = conjecture::explore(budget, &cfg)?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            for finding in &report.findings {
                eprintln!("flagged: {finding}");
            }
            Ok(0)
        }
    }
}
