use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dynatomic::arith::parse_rational;
use dynatomic::BigRational;

#[derive(Debug, Parser)]
#[command(
    name = "dynatomic",
    version,
    about = "Dynatomic polynomials of z^d + c over Q, periodic cycles and Property A"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the dynatomic polynomial Φ_N(z, c).
    Phi(PhiArgs),
    /// Factor Φ_N(z, c), or a given polynomial, over Q.
    Factor(FactorArgs),
    /// List the periodic cycles read off the factors of Φ_N(z, c).
    Cycles(CheckArgs),
    /// Decide Property A for (d, c, N).
    Check(CheckArgs),
    /// Check Property A for every c of bounded naive height.
    Scan(ScanArgs),
    /// Re-derive the known reducibility, cycle and Property A results.
    VerifyPaper(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "json")]
    Jsonl,
    Csv,
}

fn rational(text: &str) -> Result<BigRational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct MapArgs {
    /// Degree d of z^d + c.
    #[arg(short = 'd', long = "degree", default_value_t = 2)]
    pub d: u32,
    /// Period N.
    #[arg(short = 'N', long = "period")]
    pub n: u32,
    /// Rational parameter c, as "a/b" or an integer.
    #[arg(short = 'c', allow_hyphen_values = true, value_parser = rational)]
    pub c: Option<BigRational>,
}

#[derive(Debug, Args)]
pub struct PhiArgs {
    #[command(flatten)]
    pub map: MapArgs,
    /// Keep c symbolic.
    #[arg(long, conflicts_with = "c")]
    pub generic: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    #[arg(short = 'd', long = "degree", default_value_t = 2)]
    pub d: u32,
    #[arg(short = 'N', long = "period", required_unless_present = "poly")]
    pub n: Option<u32>,
    #[arg(short = 'c', allow_hyphen_values = true, value_parser = rational, required_unless_present = "poly")]
    pub c: Option<BigRational>,
    /// Factor this polynomial in z instead of Φ_N.
    #[arg(long, conflicts_with_all = ["n", "c"])]
    pub poly: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub map: MapArgs,
    /// Let rational points of exact period N falsify Property A.
    #[arg(long)]
    pub include_rational_points: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(short = 'd', long = "degree", default_value_t = 2)]
    pub d: u32,
    /// Periods to scan; repeat for several.
    #[arg(short = 'N', long = "period", required = true)]
    pub n: Vec<u32>,
    /// Largest naive height max(|a|, b) of c = a/b.
    #[arg(long)]
    pub max_height: u64,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    pub format: Format,
    /// Write records here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub include_rational_points: bool,
    /// Add per-record wall-clock times (makes output nondeterministic).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Worker threads for the scan-based items.
    #[arg(long)]
    pub jobs: Option<usize>,
}
