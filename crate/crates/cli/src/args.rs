use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

/// Generalized Littlewood-Richardson coefficients and classical-group
/// invariants by counting contingency tables.
#[derive(Parser, Debug)]
#[command(name = "lrtables", version)]
pub struct Cli {
    /// Output format. Batch mode always writes JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for table enumeration (default: one per core).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Include every contributing table in the output.
    #[arg(long, global = true)]
    pub emit_tables: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupArg {
    #[default]
    O,
    Sp,
}

#[derive(Subcommand, Debug, Clone, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// GL_n invariants of a tensor product, or the multiplicity of --target in it.
    Lrc(GlArgs),
    /// O_n / Sp_2n invariants of a tensor product.
    Osp(OspArgs),
    /// Count integer contingency tables with fixed margins.
    Tables(TablesArgs),
    /// Same quantity as lrc or osp, computed without contingency tables.
    Oracle(EitherArgs),
    /// Run the table method and the oracle and report whether they agree.
    Crosscheck(EitherArgs),
    /// List the contributing tables with their norms.
    Enumerate(EitherArgs),
    /// Read one JSON request per line from stdin, answer one JSON line each.
    #[serde(skip)]
    Batch,
}

/// Weights are full tuples such as `[2,0,0,-1]`, or `plus/minus` pairs such
/// as `[2]/[1]` whose rank comes from --n or from the stable threshold.
#[derive(Args, Debug, Clone, Default, Deserialize)]
pub struct GlArgs {
    #[arg(long, num_args = 1.., required = true)]
    #[serde(default)]
    pub weights: Vec<String>,

    /// Highest weight whose multiplicity is wanted (default: trivial).
    #[arg(long)]
    #[serde(default)]
    pub target: Option<String>,

    /// Rank; tuple weights are re-embedded at this rank.
    #[arg(long)]
    #[serde(default)]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone, Default, Deserialize)]
pub struct OspArgs {
    /// Only changes the wording of stable-range errors.
    #[arg(long, value_enum, default_value_t = GroupArg::O)]
    #[serde(default)]
    pub group: GroupArg,

    /// Partitions such as `[2,1]`.
    #[arg(long, num_args = 1.., required = true)]
    #[serde(default)]
    pub margins: Vec<String>,

    /// Rank (default: 2 * total length of the margins).
    #[arg(long)]
    #[serde(default)]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone, Default, Deserialize)]
pub struct TablesArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    #[serde(default)]
    pub rows: Vec<usize>,

    /// Column margins (default: the row margins).
    #[arg(long, value_delimiter = ',')]
    #[serde(default)]
    pub cols: Option<Vec<usize>>,

    /// Force the diagonal to zero.
    #[arg(long)]
    #[serde(default)]
    pub hollow: bool,

    /// Only symmetric tables.
    #[arg(long)]
    #[serde(default)]
    pub symmetric: bool,

    /// Upper bound on every entry.
    #[arg(long)]
    #[serde(default)]
    pub cap: Option<usize>,
}

/// Either GL weights (with optional target) or O/Sp margins.
#[derive(Args, Debug, Clone, Default, Deserialize)]
pub struct EitherArgs {
    #[arg(long, num_args = 1.., conflicts_with_all = ["margins", "group"])]
    #[serde(default)]
    pub weights: Vec<String>,

    #[arg(long, requires = "weights")]
    #[serde(default)]
    pub target: Option<String>,

    #[arg(long, num_args = 1..)]
    #[serde(default)]
    pub margins: Vec<String>,

    #[arg(long, value_enum, requires = "margins")]
    #[serde(default)]
    pub group: Option<GroupArg>,

    #[arg(long)]
    #[serde(default)]
    pub n: Option<usize>,
}

/// One line of batch input: a command plus the per-request table switch.
#[derive(Debug, Deserialize)]
pub struct BatchLine {
    #[serde(flatten)]
    pub command: Command,
    #[serde(default)]
    pub emit_tables: bool,
}
