use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "rootpoly",
    version,
    about = "Exact Jacobi and Macdonald polynomials, Dunkl operators and the rank-one tower"
)]
pub struct Cli {
    /// Flat TOML file supplying defaults for caps and common flags.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Root system label such as A2, B3, C2 or D4.
    #[arg(long = "type", global = true, value_name = "TYPE")]
    pub root_type: Option<String>,

    /// Multiplicity: one value, or "long,short".
    #[arg(long, global = true, value_name = "K")]
    pub k: Option<String>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Run every loop on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Csv,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Latex => "latex",
            Format::Csv => "csv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Jacobi,
    Macdonald,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorArg {
    Rational,
    Heckman,
    Cherednik,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function1d {
    /// The normalized Bessel-type function.
    Bessel,
    /// The generalized exponential (real and imaginary parts).
    Exp,
    /// The Gegenbauer polynomial with unit leading orbit-sum coefficient.
    Gegenbauer,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, Gram matrices and positive roots.
    Rootinfo,
    /// The orbit sum of a dominant weight.
    Msym(LambdaArg),
    /// The Jacobi polynomial of a dominant weight.
    Jacobi(LambdaArg),
    /// The Macdonald polynomial of a dominant weight.
    Macdonald(LambdaArg),
    /// All pairings of the polynomials up to a height.
    Gram(TableArgs),
    /// Constant term of the weight and the norm table up to a height.
    Norm(TableArgs),
    /// Apply a Dunkl-type operator to a polynomial given as JSON.
    Dunkl(DunklArgs),
    /// Run the verification suite, or named checks from it.
    Verify(VerifyArgs),
    /// Evaluate a one-variable function numerically.
    Eval1d(Eval1dArgs),
    /// Gap tables for the two limit transitions.
    Limits(LimitsArgs),
}

#[derive(Debug, Args)]
pub struct LambdaArg {
    /// Dominant weight in fundamental-weight coordinates, e.g. "1,0".
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Largest height of the dominant weights included.
    #[arg(long, default_value_t = 3)]
    pub height: u32,

    #[arg(long, value_enum, default_value_t = FamilyArg::Jacobi)]
    pub family: FamilyArg,
}

#[derive(Debug, Args)]
pub struct DunklArgs {
    #[arg(long, value_enum)]
    pub op: OperatorArg,

    /// Direction in fundamental-weight coordinates; rational entries allowed.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: String,

    /// JSON file with {"terms": [{"exp": [..], "coeff": ".."}]}; "-" reads stdin.
    #[arg(long, default_value = "-")]
    pub input: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run the complete suite at full scale.
    #[arg(long, conflicts_with_all = ["quick", "checks"])]
    pub all: bool,

    /// Run the complete suite at reduced scale.
    #[arg(long, conflicts_with = "checks")]
    pub quick: bool,

    /// Include per-check detail in the output.
    #[arg(long)]
    pub detail: bool,

    /// Checks to run at full scale.
    #[arg(value_enum)]
    pub checks: Vec<CheckName>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum CheckName {
    Axioms,
    /// Rational and Cherednik commutator grids.
    Commutators,
    Orthogonality,
    Eigen,
    Heckman,
    Qlimits,
    Qdiff,
    Tower,
    Shift,
    Norms,
    Numeric,
}

#[derive(Debug, Args)]
pub struct Eval1dArgs {
    #[arg(long, value_enum)]
    pub function: Function1d,

    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,

    /// Absolute error bound for the series functions.
    #[arg(long, default_value_t = 1e-15)]
    pub tol: f64,

    /// Degree, for the Gegenbauer polynomial.
    #[arg(long, default_value_t = 0)]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    /// Comma-separated truncation parameters N.
    #[arg(long = "big-n", default_value = "200")]
    pub big_n: String,

    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub x: f64,

    /// Ratio n_N / N.
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,

    /// Largest degree in the q -> 1 table.
    #[arg(long, default_value_t = 8)]
    pub max_n: u32,
}
