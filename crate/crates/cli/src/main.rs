//! `semiring`: check, construct, classify and enumerate finite semirings.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "semiring",
    version,
    about = "Finite semirings given by Cayley tables"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Vg,
    Matq,
    ZeroRing,
    Howie,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a semiring file and report its structure
    Check {
        /// Semiring JSON file, or `-` for standard input
        file: String,
    },
    /// Build a semiring from a named family and print it as JSON
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Group for `vg` (z1..z8, klein4, s3, z2xz4, z2xz2xz2, d4, q8)
        #[arg(long)]
        group: Option<String>,
        /// Field order for `matq`
        #[arg(long)]
        q: Option<usize>,
        /// Matrix size for `matq`
        #[arg(long)]
        n: Option<usize>,
        /// Modulus for `zero-ring`
        #[arg(long)]
        m: Option<usize>,
        /// P matrix JSON file for `howie`
        #[arg(long)]
        pmatrix: Option<String>,
        /// Table name for `table` (T1..T8, W3)
        #[arg(long)]
        name: Option<String>,
    },
    /// Classify a congruence-simple semiring
    Classify { file: String },
    /// Enumerate all semirings of a small order up to isomorphism
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        csimple_only: bool,
        #[arg(long)]
        commutative_only: bool,
        /// Catalog file to write (JSONL); printed to standard output otherwise
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        node_budget: Option<u64>,
        /// Seconds
        #[arg(long)]
        time_budget: Option<u64>,
    },
    /// Decide whether two semirings are isomorphic (exit 0 if so, 1 if not)
    Iso { file1: String, file2: String },
    /// Check the structure lemmas on files, or on the built-in corpus when none are given
    VerifyTheorems {
        files: Vec<String>,
        /// Largest enumerated order in the built-in corpus
        #[arg(long, default_value_t = 3)]
        max_order: usize,
    },
    /// Query a catalog file
    Catalog {
        path: String,
        #[arg(long)]
        order: Option<usize>,
        /// Keep entries with this flag set (repeatable); prefix with `!` to negate
        #[arg(long = "flag")]
        flags: Vec<String>,
        /// Keep entries with this classification case
        #[arg(long)]
        case: Option<String>,
    },
}

fn configure_threads() {
    if let Some(n) = std::env::var("SEMIRING_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
