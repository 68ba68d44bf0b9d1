//! `rpgraph`: batch front end for clique minors, reducible partitions,
//! colorings and claim campaigns.
//!
//! Exit codes: 0 ok, 2 parse or config error, 3 budget or size limit,
//! 4 construction failure (certificate on stdout), 5 inapplicable,
//! 6 refutations found.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use input::Format;

#[derive(Parser)]
#[command(name = "rpgraph", version, about = "Clique minors, reducible partitions and colorings of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Common {
    /// Input text format.
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Node budget per search call.
    #[arg(long, env = "RPGRAPH_BUDGET")]
    budget: Option<u64>,
    /// Seed for random generators and random campaign families.
    #[arg(long)]
    seed: Option<u64>,
    /// Write the JSON result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Order, size, structure and Hadwiger number.
    Info {
        /// A path, `-` for stdin, `g6:<graph6>` or `gen:<family>:<args>`.
        #[arg(default_value = "-")]
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Clique-minor search; without `--t`, the Hadwiger number.
    Minor {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Build and validate an RP, SRP or ERP.
    Partition {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Clique order; defaults to the Hadwiger number.
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Color the graph.
    Color {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Chromatic)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// Run a claim campaign described by a JSON config file.
    Verify {
        /// Campaign config path, or `-` for stdin.
        config: String,
        /// Worker threads; defaults to available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Print one graph per isomorphism class, in graph6.
    Enumerate {
        /// Largest order.
        #[arg(long)]
        order: usize,
        /// Smallest order.
        #[arg(long, default_value_t = 1)]
        min_order: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum KindArg {
    Rp,
    Srp,
    Erp,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Method {
    /// Exact chromatic number.
    Chromatic,
    /// First fit in vertex order.
    Greedy,
    /// Inductive coloring along strong reducible partitions.
    Srp,
    /// Four-coloring of planar graphs from an ERP.
    Fc4,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Info { input, common } => commands::info(&input, &common),
        Command::Minor { input, t, common } => commands::minor(&input, t, &common),
        Command::Partition {
            input,
            kind,
            t,
            common,
        } => commands::partition(&input, kind, t, &common),
        Command::Color {
            input,
            method,
            common,
        } => commands::color(&input, method, &common),
        Command::Verify {
            config,
            jobs,
            common,
        } => commands::verify(&config, jobs, &common),
        Command::Enumerate {
            order,
            min_order,
            common,
        } => commands::enumerate(min_order, order, &common),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("rpgraph: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
