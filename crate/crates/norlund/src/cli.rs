use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact Nörlund tables, sech² convolution densities and identity checks.
///
/// Every output is deterministic. Tolerances of `verify` are multiplied by
/// the NORLUND_TOLERANCE_SCALE environment variable (default 1).
#[derive(Debug, Parser)]
#[command(name = "norlund", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact rational tables, printed as p/q.
    Compute(ComputeArgs),
    /// Evaluate ρ_ℓ at one or more points.
    Density(DensityArgs),
    /// Run identity checks; exit 1 if any fails.
    Verify(VerifyArgs),
    /// Grid of ρ_1 … ρ_L over an x range, for plotting.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComputeKind {
    /// Bernoulli numbers B_0 … B_n.
    Bernoulli,
    /// Nörlund polynomials B_k^(alpha), or their values with --alpha.
    Norlund,
    /// Modified Nörlund values B_k^(ell)*, or polynomials in alpha without --ell.
    Modified,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub kind: ComputeKind,
    /// Largest index (at most 200).
    #[arg(long, short)]
    pub n: u32,
    /// Order ℓ for `modified`.
    #[arg(long)]
    pub ell: Option<u32>,
    /// Rational α ("p" or "p/q") for `norlund`.
    #[arg(long)]
    pub alpha: Option<String>,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[arg(long)]
    pub ell: u32,
    /// Points, comma separated or repeated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        required_unless_present = "dump_expr"
    )]
    pub x: Vec<f64>,
    /// closed_form, recurrence, fourier, barnes_zeta or convolution_oracle.
    #[arg(long, default_value = "closed_form")]
    pub method: String,
    /// Print the symbolic closed form instead of values.
    #[arg(long)]
    pub dump_expr: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityKind {
    First,
    Second,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `all` runs every identity with its default grid.
    #[arg(long, conflicts_with = "id")]
    pub suite: Option<String>,
    /// Identity ids, comma separated or repeated.
    #[arg(long, value_delimiter = ',')]
    pub id: Vec<String>,
    /// List the identity ids and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub ell: Option<u32>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub x: Option<Vec<f64>>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub p: Option<i64>,
    /// Which of a pair of identities (chebyshev-integrals, hurwitz-sums).
    #[arg(long, value_enum)]
    pub identity: Option<IdentityKind>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub a: Option<Vec<f64>>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pub z: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Columns ρ_1 … ρ_L.
    #[arg(long, default_value_t = 4)]
    pub ell_max: u32,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x_min: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = 0.25)]
    pub step: f64,
}
