use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact multiplicities of nilpotent-cone components.
///
/// Simple roots use Bourbaki numbering (nodes 1..=rank).
#[derive(Debug, Parser)]
#[command(name = "nilcone", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Add wall-clock time to the report (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Virtual equivariant multiplicities.
    #[command(subcommand)]
    Mult(MultCommand),
    /// Very-stability verdict for a chain.
    Classify(ClassifyArgs),
    /// Apply a list of Hecke moves to a chain.
    Hecke(HeckeArgs),
    /// Positive roots, heights, degrees and cominuscule nodes.
    Rootinfo(RootArgs),
    /// Polynomiality of the simple-group multiplicity over a box of m-vectors.
    Scan(ScanArgs),
    /// Equivariant Euler pairing series m_A m_B χ(Sym A*).
    Pair(PairArgs),
    /// Intersection count of the upward flow with a generic Hitchin fibre.
    Count(CountArgs),
}

#[derive(Debug, Subcommand)]
pub enum MultCommand {
    /// GL_n fixed points: types (n), (1,…,1) and rank-3 (1,2).
    Gl(MultGlArgs),
    /// Chain-type fixed points of a simple group.
    Simple(MultSimpleArgs),
}

#[derive(Debug, Args)]
pub struct MultGlArgs {
    #[arg(long)]
    pub g: i64,
    #[arg(long)]
    pub n: Option<i64>,
    /// n | chain | type12
    #[arg(long = "type")]
    pub kind: String,
    /// m_1,…,m_{n-1} for a chain with distinct zeros.
    #[arg(long, value_delimiter = ',')]
    pub m: Option<Vec<i64>>,
    #[arg(long)]
    pub chain_file: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub twol_minus_v: Option<i64>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Family letter A–G.
    #[arg(long = "type")]
    pub family: String,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Args)]
pub struct MultSimpleArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<u32>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub chain_file: PathBuf,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct HeckeArgs {
    #[arg(long)]
    pub chain_file: PathBuf,
    /// JSON list of {"op": "remove"|"add", "i_or_k": int, "point": label}.
    #[arg(long, conflicts_with = "moves")]
    pub moves_file: Option<PathBuf>,
    /// Same list given inline.
    #[arg(long)]
    pub moves: Option<String>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct RootArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long)]
    pub bound: u32,
    #[arg(long, default_value_t = nilcone::multsimple::DEFAULT_SCAN_CAP)]
    pub cap: u64,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub g: i64,
    #[arg(long)]
    pub n: i64,
    /// Coefficients of m_A, ascending.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub a: Vec<i64>,
    /// Coefficients of m_B, ascending.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub b: Vec<i64>,
    #[arg(long, default_value_t = 20)]
    pub order: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub chain_file: PathBuf,
    /// Also enumerate the choices and report how many there are.
    #[arg(long)]
    pub enumerate: bool,
    /// Include every enumerated choice in the report.
    #[arg(long, requires = "enumerate")]
    pub list: bool,
    #[arg(long, default_value_t = nilcone::hecke::DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
    #[command(flatten)]
    pub out: Output,
}
