//! Command-line front end for `momentcone`.
//!
//! [`run`] parses arguments, executes one command and returns the text to
//! print together with the process exit code, so the binary and the tests
//! share one code path.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 precondition error,
//! 4 invariant breach (Monte-Carlo violation, golden-file mismatch).

pub mod commands;
pub mod symbolic;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const GOLDEN_HORN4: &str = include_str!("../golden/horn4.txt");
pub const GOLDEN_SU22: &str = include_str!("../golden/su22.txt");

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BREACH: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "momentcone", version, about = "Moment polytopes of real flag varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PairArg {
    /// Pair label: AI:n, AIII:p,q, BDI:p,q, Torus:n or Diag:<family><rank>.
    #[arg(long)]
    pub pair: String,
}

#[derive(Debug, Args)]
pub struct Weights {
    #[command(flatten)]
    pub pair: PairArg,
    /// Comma separated exact fractions, e.g. 3/2,1.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Roots, simple roots and Weyl group order of a root system.
    Rootsys { family: String, rank: usize },
    /// Ambient and restricted root data of a symmetric pair.
    Pair(PairArg),
    /// Hull of the restricted Weyl orbit of lambda.
    Kostant {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Horn table of triples for SU(n), with duals.
    Horn { n: usize },
    /// Restricted Horn polytope of attainable nu for fixed lambda, mu.
    Klyachko {
        #[command(flatten)]
        weights: Weights,
        /// Weyl word (e.g. s2s1): the orbit-closure subpolytope instead.
        #[arg(long)]
        w: Option<String>,
        /// Emit plot-ready vertex coordinates.
        #[arg(long)]
        figure: bool,
    },
    /// Symbolic reduction of the SU(4) Horn system to SU(2,2).
    #[command(name = "su22-table")]
    Su22Table,
    /// Bruhat order in the restricted Weyl group.
    Bruhat {
        #[command(flatten)]
        pair: PairArg,
        /// Lower element; without it the whole interval below w is listed.
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        w: String,
    },
    /// Monte-Carlo spectra checked against the exact polytope.
    Sample {
        #[command(flatten)]
        weights: Weights,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        /// Falls back to MOMENTCONE_SEED, then to entropy.
        #[arg(long, env = "MOMENTCONE_SEED")]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Fraction of trials drawn with shared frames and a signed
        /// permutation of mu (reaches the vertices).
        #[arg(long, default_value_t = 0.0)]
        aligned_fraction: f64,
    },
    /// Exact membership of nu in the polytope.
    Check {
        #[command(flatten)]
        weights: Weights,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long)]
        w: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failure carrying its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    pub fn breach(message: impl Into<String>) -> Self {
        Self { code: EXIT_BREACH, message: message.into() }
    }
}

impl From<momentcone::Error> for CliError {
    fn from(e: momentcone::Error) -> Self {
        let code = match e {
            momentcone::Error::Precondition(_) => EXIT_PRECONDITION,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

/// Output of a command: the report and, when something was checked and
/// failed, the breach that decides the exit code.
pub struct Report {
    pub body: String,
    pub breach: Option<String>,
}

impl Report {
    pub fn ok(body: String) -> Self {
        Self { body, breach: None }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let report = match commands::dispatch(cli) {
        Ok(r) => r,
        Err(e) => return Outcome { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e.message) },
    };
    let mut stdout = report.body;
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &stdout) {
            return Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
        stdout = String::new();
    }
    match report.breach {
        Some(msg) => Outcome { code: EXIT_BREACH, stdout, stderr: format!("error: {msg}\n") },
        None => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
    }
}
