use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use scc_cli::{run_bench_command, run_gen_command, run_solve_command, CliError};
use scc_core::GraphKind;

#[derive(Parser)]
#[command(
    name = "scc",
    version,
    about = "Strongly connected components of directed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an edge-list file ("n m" header, then m 1-based pairs) and
    /// write the component listing.
    Solve { input: PathBuf, output: PathBuf },
    /// Generate a graph as an edge-list file.
    Gen {
        #[command(flatten)]
        graph: GraphArgs,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve generated graphs with operation counters and print one
    /// tab-separated line per run:
    /// kind n m seed wall_ns find_links unions checks pushes
    Bench {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 1)]
        reps: usize,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// random | cycle | path | dag | cycle-chain
    kind: String,
    /// random N M | cycle N | path N | dag N M | cycle-chain N K
    #[arg(required = true)]
    params: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl GraphArgs {
    fn kind(&self) -> Result<GraphKind, CliError> {
        Ok(GraphKind::from_parts(&self.kind, &self.params)?)
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { input, output } => run_solve_command(&input, &output),
        Command::Gen { graph, output } => {
            run_gen_command(graph.kind()?, graph.seed, output.as_deref(), io::stdout())
        }
        Command::Bench { graph, reps } => {
            run_bench_command(graph.kind()?, graph.seed, reps, io::stdout().lock())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("scc: error: {err}");
            err.exit_code()
        }
    }
}
