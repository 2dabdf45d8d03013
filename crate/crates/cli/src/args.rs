use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::report::Format;

/// Exact coefficients, certification and quasi-polynomial fitting for
/// generating functions N(q) / ∏(1 − q^b).
#[derive(Debug, Parser)]
#[command(name = "qpcert", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the power-series coefficients c_0..c_N.
    Coeffs(CoeffsArgs),
    /// Prove or refute  [q^n] GF = EXPR  for every n past the onset.
    Certify(CertifyArgs),
    /// Integer-sided triangles by perimeter.
    Triangles {
        #[command(subcommand)]
        action: TrianglesCommand,
    },
    /// Guess a quasi-polynomial for a sequence of integers.
    Fit(FitArgs),
    /// Compare the triangle generating function with
    /// round(n^2/12) - floor(n/4)*floor((n+2)/4) for n = 0..36.
    Paper,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("numerator").args(["num", "shift"]).required(true)))]
pub struct GfArgs {
    /// Denominator part sizes b1,b2,... (one factor 1 - q^b each).
    #[arg(long, value_delimiter = ',', required = true, num_args = 1)]
    pub parts: Vec<u64>,

    /// Numerator coefficients, low to high.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        value_parser = parse_bigint,
        num_args = 1
    )]
    pub num: Option<Vec<BigInt>>,

    /// Monomial numerator q^s.
    #[arg(long)]
    pub shift: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub gf: GfArgs,

    /// Last coefficient index.
    #[arg(long)]
    pub upto: usize,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub gf: GfArgs,

    /// Closed form in n, e.g. "round(n^2/12) - floor(n/4)*floor((n+2)/4)".
    #[arg(long, allow_hyphen_values = true)]
    pub expr: String,

    /// Claim the identity only from this index on.
    #[arg(long)]
    pub onset: Option<u64>,

    /// Also spot-check this many pseudo-random indices.
    #[arg(long)]
    pub probe: Option<usize>,

    /// Largest index the probe may draw.
    #[arg(long, default_value_t = 100_000)]
    pub probe_max: u64,

    /// Probe generator seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum TrianglesCommand {
    /// Number of triangles with the given perimeter.
    Count(PerimeterArg),
    /// The triangles themselves, sides sorted non-increasing.
    List(PerimeterArg),
}

#[derive(Debug, Args)]
pub struct PerimeterArg {
    #[arg(long, allow_negative_numbers = true)]
    pub perimeter: i64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").args(["values", "stdin"]).required(true)))]
pub struct FitArgs {
    /// File of whitespace-separated integers, indexed from n = 0.
    #[arg(long)]
    pub values: Option<PathBuf>,

    /// Read the values from standard input.
    #[arg(long)]
    pub stdin: bool,

    /// Largest degree tried.
    #[arg(long, default_value_t = 2)]
    pub dmax: usize,

    /// Largest period tried.
    #[arg(long, default_value_t = 4)]
    pub lmax: usize,

    /// Samples that must remain past the training prefix (default: lmax).
    #[arg(long)]
    pub holdout: Option<usize>,
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{s:?} is not an integer"))
}
