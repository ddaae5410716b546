use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Fractional revival and perfect state transfer in association schemes.
#[derive(Debug, Parser)]
#[command(name = "revival", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verdict for a (weighted) union of distance classes of H(n,2).
    Analyze(AnalyzeArgs),
    /// Enumerate unions with revival over a range of n.
    Search(SearchArgs),
    /// Reproduce the distance-regular graph table as CSV.
    DrgTable(DrgTableArgs),
    /// Amplitude profile f(0..n) at one time, as JSON.
    Profile(ProfileArgs),
    /// Verdict for a spectrum given as JSON {theta, sigma, label}.
    Spectrum(SpectrumArgs),
    /// Verdict for a graph in an explicit scheme read from a class-matrix file.
    Scheme(SchemeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct PrecisionArgs {
    /// Oracle precision in bits (at least n + 64).
    #[arg(long, env = "REVIVAL_PRECISION_BITS")]
    pub precision: Option<u32>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_delimiter = ',', required = true)]
    pub classes: Vec<u64>,
    /// Rational weights, one per class, e.g. `2,1/2,-1`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub weights: Option<Vec<String>>,
    /// Check the predicted revival with the amplitude oracle.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub precision: PrecisionArgs,
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
    /// Also run the exact test at this time, e.g. `1/4 pi`.
    #[arg(long)]
    pub time: Option<String>,
    /// Exit with status 2 unless the verdict has fractional revival.
    #[arg(long)]
    pub expect_fr: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub n_min: u64,
    #[arg(long)]
    pub n_max: u64,
    #[arg(long, default_value_t = 1)]
    pub max_classes: usize,
    /// Keep only unions with balanced revival.
    #[arg(long)]
    pub balanced_only: bool,
    /// Worker threads; output does not depend on it.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DrgTableArgs {
    /// A single family instead of the full table.
    #[arg(long, requires = "n_or_d")]
    pub family: Option<String>,
    #[arg(long, group = "n_or_d")]
    pub n: Option<u64>,
    #[arg(long, group = "n_or_d")]
    pub d: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_delimiter = ',', required = true)]
    pub classes: Vec<u64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub weights: Option<Vec<String>>,
    /// Walk time, e.g. `1/4 pi`.
    #[arg(long, allow_hyphen_values = true)]
    pub time: String,
    #[command(flatten)]
    pub precision: PrecisionArgs,
    /// Use the double-precision path.
    #[arg(long)]
    pub fast: bool,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub time: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SchemeArgs {
    #[arg(long)]
    pub file: PathBuf,
    /// Classes whose sum is the graph.
    #[arg(long, value_delimiter = ',', required = true)]
    pub classes: Vec<usize>,
    /// The permutation class of order 2; found automatically when unique.
    #[arg(long)]
    pub q: Option<usize>,
    /// Check the revival with a dense walk from vertex 0.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
