//! Command-line front end. `main.rs` only calls [`main_entry`].
//!
//! Exit codes: 0 all checks pass, 1 a verified property failed, 2 usage or build error.

mod commands;
mod report;
mod spec;

pub use report::{Format, Report, Verdict};
pub use spec::{resolve_spec, SpecArgs};

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "trirec", version, about = "Exact triangular recurrences, log-concavity checks and lattice-path injections")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rows of a triangular array.
    Table {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 8)]
        max_n: i64,
        /// Drop leading and trailing zeros of each row.
        #[arg(long)]
        trim: bool,
    },
    /// Run sufficient-condition checkers plus a direct row scan.
    Check {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        /// Rows covered by the condition checkers.
        #[arg(long, default_value_t = 6)]
        max_n: i64,
        /// Rows covered by the direct log-concavity scan (default: 12).
        #[arg(long, default_value_t = 12)]
        scan_max_n: i64,
        /// Scan the structural triangle or widen it by one column on each side.
        #[arg(long, value_enum, default_value_t = RegionArg::Structural)]
        region: RegionArg,
    },
    /// Exhaustive injection, Motzkin and weight-monotonicity sweep for one row.
    VerifyInjection {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 6)]
        n: i64,
        /// Restrict the weight check to one column.
        #[arg(long)]
        k: Option<i64>,
        /// Largest n - n0 enumerated.
        #[arg(long, default_value_t = 10)]
        max_span: i64,
        /// Counterexamples listed per column.
        #[arg(long, default_value_t = 20)]
        max_listed: usize,
        /// Also map one pair `P,Q` of N/C words starting at the anchor.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Generalized Eulerian polynomials: rows, symmetry, gamma vectors, real roots.
    Eulerian {
        #[arg(long, default_value_t = 1)]
        l: u32,
        /// A single row.
        #[arg(long, conflicts_with = "max_n")]
        n: Option<usize>,
        /// Rows 1..=max_n.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Skip the census cross-check (it runs for n <= 8 by default).
        #[arg(long)]
        no_bruteforce: bool,
    },
    /// OEIS b-file access and comparison against catalog triangles.
    Oeis {
        #[command(subcommand)]
        action: OeisAction,
    },
    /// Check k! S_r(n,k) against the Eulerian-number sum and its inverse.
    Identity {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Apply the bijection from subexceedant functions to permutations, or its inverse.
    Lambda {
        /// One-line digits, comma-separated beyond 9.
        word: String,
        #[arg(long)]
        inverse: bool,
    },
    /// List catalog entries.
    Catalog,
}

#[derive(Debug, Subcommand)]
pub enum OeisAction {
    /// Print the terms of a b-file.
    Fetch {
        id: String,
        #[command(flatten)]
        source: OeisSource,
    },
    /// Compare a catalog triangle against a b-file in the fixture reading order.
    Compare {
        id: String,
        #[command(flatten)]
        source: OeisSource,
        #[arg(long)]
        terms: Option<usize>,
    },
    /// List known ids with their catalog mapping.
    List,
}

#[derive(Debug, Args)]
pub struct OeisSource {
    /// Try the network first (ignored when TRIREC_OFFLINE is set).
    #[arg(long)]
    pub live: bool,
    /// Cache directory (overrides TRIREC_CACHE_DIR).
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Kurtz,
    Sagan,
    Main,
    Abc,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionArg {
    Structural,
    Extended,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Build(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Runs one parsed invocation.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        // a second initialisation in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    commands::dispatch(&cli.command)
}

/// Parses `args`, runs, and returns `(exit code, stdout, stderr)`.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match execute(&cli) {
        Ok(report) => (report.verdict.exit_code(), report.render(cli.format), String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}

pub fn main_entry() -> i32 {
    let (code, out, err) = run(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    code
}
