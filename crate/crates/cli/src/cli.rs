use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "polynum", version, about = "Exact polytope number sequences and their identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a range of a polytope number sequence.
    Seq(SeqArgs),
    /// Print simplex-decomposition coefficients from every applicable route.
    Decompose(DecomposeArgs),
    /// Run verification batches; exit 1 on any failure.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Alpha,
    Beta,
    Gamma,
    Lambda,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Simplex,
    Cross,
    Cube,
    Rectified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Dimension.
    #[arg(short = 'd', long = "dim")]
    pub d: u32,
    /// Rectification index (lambda, or oracle with --shape rectified).
    #[arg(short = 'r', long = "rect")]
    pub r: Option<u32>,
    /// Polytope for --family oracle.
    #[arg(long, value_enum, default_value_t = Shape::Simplex)]
    pub shape: Shape,
    #[arg(long, default_value_t = 1)]
    pub from: i64,
    #[arg(long)]
    pub to: i64,
    /// Defaults to formula, or oracle for --family oracle.
    #[arg(long, value_enum)]
    pub route: Option<Route>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Add the interior sequence as a column.
    #[arg(long)]
    pub interior: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["lambda", "shift"])))]
pub struct DecomposeArgs {
    /// Rectified simplex: needs -d and -r with 0 <= r < d.
    #[arg(long)]
    pub lambda: bool,
    /// Shifted simplex a·n - (a-1) - b: needs -d, -a and -b.
    #[arg(long)]
    pub shift: bool,
    #[arg(short = 'd', long = "dim")]
    pub d: u32,
    #[arg(short = 'r', long = "rect", required_if_eq("lambda", "true"))]
    pub r: Option<u32>,
    #[arg(short = 'a', required_if_eq("shift", "true"))]
    pub a: Option<u32>,
    #[arg(short = 'b', required_if_eq("shift", "true"))]
    pub b: Option<u32>,
    /// text or json.
    #[arg(long, value_enum, default_value_t = DecomposeFormat::Text)]
    pub format: DecomposeFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecomposeFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Oracle,
    Decompositions,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Cap every dimension range of the oracle and decomposition suites.
    #[arg(long)]
    pub d_max: Option<u32>,
    /// Cap every n range of the oracle and decomposition suites.
    #[arg(long)]
    pub n_max: Option<i64>,
    /// Identity grid file; defaults to the bundled grid.
    #[arg(long)]
    pub grid: Option<PathBuf>,
}
