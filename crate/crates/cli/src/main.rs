use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cutplex::DEFAULT_BUDGET;

mod input;
mod report;
mod verify;

use input::{load_complex, load_graph};
use report::Report;

/// Cut complexes of graphs: construction, homology, shellings and Morse matchings.
///
/// GRAPH is a family string such as `cycle:5`, `complete_multipartite:2,3`,
/// `prism:4` or `petersen`, or a path to a graph in the text format.
#[derive(Parser)]
#[command(name = "cutplex", version)]
struct Cli {
    /// Print JSON (0-based vertices) instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Facets, f-vector and reduced Euler characteristic of Δ_k(G).
    Build {
        graph: String,
        #[arg(long)]
        k: usize,
    },
    /// Reduced integer homology, compared with a closed form when one is known.
    Homology {
        graph: String,
        #[arg(long)]
        k: usize,
    },
    /// Search for a shelling of Δ_k(G).
    Shell {
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Discrete Morse matching on Δ_k(G).
    Morse {
        graph: String,
        #[arg(long)]
        k: usize,
        /// `tree`, `prism`, `restricted`, or a comma-separated 1-based vertex order.
        #[arg(long)]
        order: String,
        /// Root for the tree order (1-based).
        #[arg(long, default_value_t = 1)]
        root: usize,
    },
    /// Find a chordal graph whose cut complex is the given pure complex (JSON file).
    Realize { complex: String },
    /// Check a corpus of families against closed forms and the shellability table.
    Verify {
        corpus: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print computed homology next to open conjectures, without asserting them.
    Experiment {
        which: Experiment,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Experiment {
    SquaredCycle,
}

fn run(cli: &Cli) -> cutplex::Result<Report> {
    match &cli.command {
        Command::Build { graph, k } => report::build(&load_graph(graph)?, *k),
        Command::Homology { graph, k } => report::homology(&load_graph(graph)?, *k),
        Command::Shell { graph, k, budget } => report::shell(&load_graph(graph)?, *k, *budget),
        Command::Morse { graph, k, order, root } => {
            if *root == 0 {
                return Err(cutplex::Error::InvalidParameter("root is 1-based".into()));
            }
            report::morse(&load_graph(graph)?, *k, order, root - 1)
        }
        Command::Realize { complex } => report::realize(&load_complex(complex)?),
        Command::Verify { corpus, budget } => verify::verify(corpus, *budget),
        Command::Experiment { which: Experiment::SquaredCycle, k, n } => report::experiment_squared_cycle(*k, *n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("plain data") + "\n"
            } else {
                report.human
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().write_all(text.as_bytes());
            if report.mismatch {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
