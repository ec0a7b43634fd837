//! critlab: stream-oriented exact verification for list-critical graph
//! bounds. Graphs come in as newline-delimited graph6; results go out as
//! JSON Lines (or TSV for the bounds table).
//!
//! Exit codes: 0 clean, 1 when any verified inequality fails or a
//! counterexample shows up (that falsifies a theorem and demands
//! attention), 2 for usage, unreadable input, or stream parse errors.

mod commands;
mod runlog;
mod stream;

use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "critlab",
    version,
    about = "Exact deciders and bound verifiers for list-critical graph theory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every stream-processing subcommand.
#[derive(Args, Clone)]
struct StreamArgs {
    /// Input file of graph6 lines; '-' reads stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Output file; '-' writes stdout.
    #[arg(long, default_value = "-")]
    output: String,
    /// Append one run record (config, input digest, results) to this JSONL file.
    #[arg(long)]
    log: Option<String>,
    /// Worker threads for per-graph evaluation (verdicts do not depend on this).
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Vertex capacity of the choosability decider.
    #[arg(long, default_value_t = critlab_core::choosability::DEFAULT_CHOOSABLE_CAP)]
    choosable_cap: usize,
    /// Vertex capacity of the paintability decider.
    #[arg(long, default_value_t = critlab_core::paintability::DEFAULT_PAINTABLE_CAP)]
    paintable_cap: usize,
    /// Vertex capacity of the exact χ/α/mic solvers.
    #[arg(long, default_value_t = critlab_core::solve::DEFAULT_EXACT_CAP)]
    exact_cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the average-degree bounds table as TSV (columns: k, gallai_ref,
    /// ky_ref, here, conjecture; 4-decimal renderings).
    BoundsTable {
        /// k values, e.g. "4..10,15,20" (ranges inclusive).
        #[arg(long, default_value = "4..10,15,20")]
        k: String,
        /// Output file; '-' writes stdout.
        #[arg(long, default_value = "-")]
        output: String,
        /// Append a run record to this JSONL file.
        #[arg(long)]
        log: Option<String>,
    },
    /// Decide f-choosability for every graph in the stream.
    Choosable {
        /// Constant list size f.
        #[arg(short, long)]
        f: usize,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Decide f-paintability (online list coloring) for every graph.
    Paintable {
        /// Constant budget f.
        #[arg(short, long)]
        f: usize,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Certify criticality (chromatic, list, or online) with witnesses.
    Critical {
        /// chromatic | list | online
        #[arg(long)]
        kind: String,
        #[arg(short, long)]
        k: usize,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Annotate a stream with criticality verdicts (same decisions as
    /// `critical`, compact records, stream-friendly).
    Filter {
        /// chromatic | list | online
        #[arg(long)]
        kind: String,
        #[arg(short, long)]
        k: usize,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Exhaustively verify the Gallai-tree edge bound
    /// 2||T|| ≤ (k−2)|T| + 2β(T) over all Gallai trees with Δ ≤ k−1.
    GallaiVerify {
        #[arg(short, long)]
        k: usize,
        /// Largest tree order to enumerate (hard cap 12).
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        /// Output file for per-tree JSONL records; '-' writes stdout.
        #[arg(long, default_value = "-")]
        output: String,
        /// Only write violating or tight instances (default: all trees).
        #[arg(long)]
        extremes_only: bool,
        #[arg(long)]
        log: Option<String>,
    },
    /// Compute the maximum independent cover number for every graph.
    Mic {
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Evaluate the kernel bound 2||G|| ≥ (k−2)|G| + mic(G) + 1 plus the
    /// witness-combination bound and the low-vertex structure check.
    KernelMagic {
        #[arg(short, long)]
        k: usize,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Run the full proof-chain verifier on certified k-list-critical
    /// graphs (callers certify; complete graphs are skipped explicitly).
    ProofChain {
        #[arg(short, long)]
        k: usize,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Census of exceptional K2 components plus the conjectured bound
    /// avg ≥ (k−1) + (k−3)/(k−1)² over certified inputs.
    ConjectureCensus {
        #[arg(short, long)]
        k: usize,
        #[command(flatten)]
        stream: StreamArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::BoundsTable { k, output, log } => {
            commands::bounds_table(&k, &output, log.as_deref())
        }
        Command::Choosable { f, stream } => commands::choosable(f, &stream),
        Command::Paintable { f, stream } => commands::paintable(f, &stream),
        Command::Critical { kind, k, stream } => commands::critical(&kind, k, &stream, false),
        Command::Filter { kind, k, stream } => commands::critical(&kind, k, &stream, true),
        Command::GallaiVerify {
            k,
            nmax,
            output,
            extremes_only,
            log,
        } => commands::gallai_verify(k, nmax, &output, extremes_only, log.as_deref()),
        Command::Mic { stream } => commands::mic(&stream),
        Command::KernelMagic { k, stream } => commands::kernel_magic(k, &stream),
        Command::ProofChain { k, stream } => commands::proof_chain(k, &stream),
        Command::ConjectureCensus { k, stream } => commands::conjecture_census(k, &stream),
    };
    match outcome {
        Ok(commands::Outcome::Clean) => ExitCode::SUCCESS,
        Ok(commands::Outcome::ViolationFound) => ExitCode::from(1),
        Ok(commands::Outcome::InputErrors) => ExitCode::from(2),
        Err(err) => {
            eprintln!("critlab: {err:#}");
            ExitCode::from(2)
        }
    }
}
