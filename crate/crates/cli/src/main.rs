//! `dimers`: exact perfect-matching counts and the analyses built on them.

mod commands;
mod source;
mod table;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dimers::Method;

use source::{Params, Range};

pub type Result<T> = std::result::Result<T, Box<dyn std::error::Error + Send + Sync>>;

#[derive(Parser, Debug)]
#[command(
    name = "dimers",
    version,
    about = "Exact enumeration of perfect matchings and tilings"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

/// Exactly one region source.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct RegionSource {
    /// Region file: `.vax` (triangles), `.xreg` (squares) or `.cells`.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Named family, e.g. `hexagon`, `diamond`, `window`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct RegionArgs {
    #[command(flatten)]
    source: RegionSource,
    /// Family parameters, e.g. `a=2,b=2,c=2`.
    #[arg(long, default_value = "", requires = "family")]
    params: Params,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count perfect matchings of one region.
    Count {
        #[command(flatten)]
        region: RegionArgs,
        /// Force an engine instead of picking one from the graph.
        #[arg(long, value_parser = parse_method)]
        method: Option<Method>,
        /// Append the prime factorization.
        #[arg(long)]
        factored: bool,
        /// Also report the weighted sum (for weighted `.cells` files).
        #[arg(long)]
        weighted: bool,
    },
    /// Count a family over a range of one parameter.
    Sweep {
        #[arg(long)]
        family: String,
        /// Values of the varied parameter: `1..8`, `3,4,7,8` or `5`.
        #[arg(long)]
        range: Range,
        /// Parameter to vary (default depends on the family, usually `n`).
        #[arg(long)]
        vary: Option<String>,
        /// Fixed parameters.
        #[arg(long, default_value = "")]
        params: Params,
        #[arg(long, value_parser = parse_method)]
        method: Option<Method>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Add a wall-time column (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Check a known formula instance by instance.
    Verify {
        /// One of: macmahon, aztec-power, moments-vertical, invsum,
        /// pillow-gf, intruded-structure, central-edge-third.
        formula: String,
        range: Range,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Probability of every edge appearing in a uniformly random matching.
    Probs {
        #[command(flatten)]
        region: RegionArgs,
    },
    /// Moments of inertia of the horizontal lozenges of a hexagon.
    Moments {
        /// Order of the regular hexagon `n, n, n`.
        n: Option<u32>,
        /// Sides `a=..,b=..,c=..` instead of an order.
        #[arg(long, conflicts_with = "n")]
        params: Option<Params>,
        /// Print the probability picture as well.
        #[arg(long)]
        table: bool,
        /// Decimal digits in the picture.
        #[arg(long, default_value_t = 2)]
        digits: usize,
    },
    /// Cokernel of a Kasteleyn or lattice-path matrix.
    Cokernel {
        #[command(flatten)]
        region: RegionArgs,
        /// Matrix to reduce; hexagon families default to the lattice-path one.
        #[arg(long, value_enum)]
        matrix: Option<MatrixKind>,
    },
    /// Characteristic polynomial of `K K^T`.
    Spectrum {
        #[command(flatten)]
        region: RegionArgs,
    },
    /// Entry sums of the inverse Kasteleyn matrix of the Aztec diamond.
    Invsum { range: Range },
    /// Compare the dimer and tableau polynomials of an `m x n` rectangle.
    Gessel {
        m: u32,
        n: u32,
        /// Check the specialization with even-indexed variables set to zero instead.
        #[arg(long)]
        schur: bool,
        /// Print both polynomials.
        #[arg(long)]
        show: bool,
    },
    /// Check the local rewrites on randomly generated host graphs.
    RewriteCheck {
        #[arg(long, default_value_t = 50)]
        hosts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Factor integers and classify the factorization.
    Factor {
        #[arg(required = true)]
        values: Vec<num_bigint::BigInt>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Kasteleyn,
    Carlitz,
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse::<Method>().map_err(|e| e.to_string())
}

/// Text to print and whether every instance passed.
pub struct Report {
    pub text: String,
    pub ok: bool,
}

impl Report {
    pub fn ok(text: String) -> Report {
        Report { text, ok: true }
    }
}

fn run(cli: Cli) -> Result<Report> {
    let format = cli.format;
    match cli.command {
        Command::Count {
            region,
            method,
            factored,
            weighted,
        } => commands::count(&region.load()?, method, factored, weighted, format),
        Command::Sweep {
            family,
            range,
            vary,
            params,
            method,
            jobs,
            timing,
        } => {
            let vary = vary.unwrap_or_else(|| source::default_sweep_param(&family).to_string());
            commands::sweep(
                &commands::SweepArgs {
                    family,
                    range,
                    vary,
                    params,
                    method,
                    jobs,
                    timing,
                },
                format,
            )
        }
        Command::Verify {
            formula,
            range,
            jobs,
        } => commands::verify(&formula, &range, jobs, format),
        Command::Probs { region } => commands::probs(&region.load()?, format),
        Command::Moments {
            n,
            params,
            table,
            digits,
        } => commands::moments(n, params, table, digits),
        Command::Cokernel { region, matrix } => commands::cokernel(&region.load()?, matrix),
        Command::Spectrum { region } => commands::spectrum(&region.load()?, format),
        Command::Invsum { range } => commands::invsum(&range, format),
        Command::Gessel { m, n, schur, show } => commands::gessel(m, n, schur, show),
        Command::RewriteCheck { hosts, seed } => commands::rewrite_check(hosts, seed),
        Command::Factor { values } => commands::factor(&values, format),
    }
}

impl RegionArgs {
    fn load(&self) -> Result<source::Instance> {
        match (&self.source.file, &self.source.family) {
            (Some(path), _) => source::file(path),
            (None, Some(name)) => source::family(name, &self.params),
            (None, None) => Err("give --file or --family".into()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.text);
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
