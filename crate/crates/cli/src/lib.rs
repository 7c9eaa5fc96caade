//! Subcommand implementations behind the `scc` binary.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use scc_core::{
    format_edge_list, format_partition, generate_graph, parse_edge_list, run_benchmark,
    GeneratorSpec, GraphKind, InvalidSpec, ParseError,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: malformed input ({}): {source}", path.display(), source.class())]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Spec(#[from] InvalidSpec),
    #[error("writing output: {0}")]
    Output(io::Error),
}

impl CliError {
    /// sysexits-style codes: bad data, I/O, usage.
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Parse { .. } => 65,
            CliError::Io { .. } | CliError::Output(_) => 74,
            CliError::Spec(_) => 64,
        })
    }
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_owned(),
        source,
    }
}

/// Reads an edge list from `input`, solves it, and writes the component
/// listing to `output`.
pub fn run_solve_command(input: &Path, output: &Path) -> Result<(), CliError> {
    let text = fs::read_to_string(input).map_err(io_error(input))?;
    let graph = parse_edge_list(&text).map_err(|source| CliError::Parse {
        path: input.to_owned(),
        source,
    })?;
    let partition = scc_core::solve(&graph);
    fs::write(output, format_partition(&partition)).map_err(io_error(output))
}

/// Writes the generated graph as an edge list to `output`, or to `stdout`
/// when no path is given.
pub fn run_gen_command(
    kind: GraphKind,
    seed: u64,
    output: Option<&Path>,
    stdout: impl Write,
) -> Result<(), CliError> {
    let graph = generate_graph(&GeneratorSpec::new(kind, seed))?;
    let text = format_edge_list(&graph);
    match output {
        Some(path) => fs::write(path, text).map_err(io_error(path)),
        None => write_all(stdout, &text),
    }
}

/// Writes one tab-separated report line per repetition:
/// `kind n m seed wall_ns find_links unions checks pushes`.
pub fn run_bench_command(
    kind: GraphKind,
    seed: u64,
    reps: usize,
    out: impl Write,
) -> Result<(), CliError> {
    let reports = run_benchmark(&GeneratorSpec::new(kind, seed), reps)?;
    let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    write_all(out, &text)
}

fn write_all(mut out: impl Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .and_then(|()| out.flush())
        .map_err(CliError::Output)
}
