use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dynkin",
    version,
    about = "Exact Dynkin index computations for simple Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[value(alias = "markdown")]
    Md,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Partition,
    Adjoint,
    Simplest,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Principal index, difference D and McKay degrees for every family.
    Table(TableArgs),
    /// Index of the sl2-subalgebra attached to a nilpotent with given Jordan type.
    Index(IndexArgs),
    /// Dimension and Dynkin index of an irreducible representation.
    RepIndex(RepIndexArgs),
    /// Run the verification sweeps.
    Verify(VerifyArgs),
    /// Closure order on nilpotent orbits of a classical algebra.
    Poset(PosetArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// json, csv or md (default md).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Rank at which the classical series are evaluated.
    #[arg(long, default_value_t = 5)]
    pub sample_rank: usize,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    /// `sl8`, `sp6`, `so13`, `C3`, `E6`, ...
    #[arg(long)]
    pub algebra: String,
    /// Jordan type as comma-separated parts, e.g. `7,1`.
    #[arg(long)]
    pub partition: String,
    #[arg(long, value_enum, default_value_t = Via::All)]
    pub via: Via,
    /// json, csv or md (default json).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct RepIndexArgs {
    #[arg(long)]
    pub algebra: String,
    /// Highest weight in fundamental-weight coordinates (Bourbaki order).
    #[arg(long)]
    pub weight: String,
    /// json, csv or md (default json).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// TOML file with verification bounds and checks.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Restrict to these checks (repeatable or comma-separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    #[arg(long)]
    pub max_classical_rank: Option<usize>,
    #[arg(long)]
    pub max_partition_size: Option<usize>,
    #[arg(long)]
    pub max_identity_n: Option<usize>,
    /// json, csv or md (default md).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct PosetArgs {
    /// sl, sp or so.
    #[arg(long)]
    pub kind: String,
    #[arg(long = "n")]
    pub n: usize,
    /// dot or json (default dot).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}
