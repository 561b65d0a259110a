use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "poisson-cli", version, about = "Verify hyperbolic-series identities and evaluate the functions behind them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate catalog identities and compare against their expected status
    Verify(VerifyArgs),
    /// List catalog identities
    List(ListArgs),
    /// Evaluate a special function or number sequence
    Eval(EvalArgs),
    /// Print an exact table of Q, Bernoulli or Eulerian numbers
    Table(TableArgs),
    /// Evaluate both sides of a lattice-sum transform for a builtin function
    Transform(TransformArgs),
    /// Run the whole catalog and print the discrepancy ledger
    Ledger(LedgerArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LedgerFormat {
    Markdown,
    Json,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Absolute tolerance of the pass criterion
    #[arg(long = "tol", default_value_t = 1e-10, allow_negative_numbers = true)]
    pub abs_tol: f64,
    /// Relative tolerance of the pass criterion
    #[arg(long = "rel-tol", default_value_t = 1e-9, allow_negative_numbers = true)]
    pub rel_tol: f64,
    /// Term cap for every series
    #[arg(long, default_value_t = 100_000)]
    pub max_terms: usize,
    /// Worker threads
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub parallel: u16,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity id (repeatable; default: all)
    #[arg(long = "id")]
    pub ids: Vec<String>,
    /// Restrict to one variant (as_printed, corrected, derived_closed_form, aux)
    #[arg(long)]
    pub variant: Option<String>,
    /// Fix a parameter, e.g. --param m=1 (repeatable)
    #[arg(long = "param", value_name = "NAME=VALUE", allow_hyphen_values = true)]
    pub params: Vec<String>,
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Require every outcome to pass, including variants expected to fail
    #[arg(long)]
    pub strict: bool,
    /// Report elapsed_ms as 0 so output is byte-for-byte reproducible
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[arg(long, value_enum, default_value_t = ListFormat::Text)]
    pub format: ListFormat,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// bernoulli, qnumber, eta-neg, eulerian, zeta, catalan, li3, lerch, K, E, modulus-from-ratio, li-neg
    pub function: String,
    #[arg(allow_negative_numbers = true)]
    pub args: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Q,
    Bernoulli,
    Eulerian,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    /// Largest index
    #[arg(long)]
    pub max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operation {
    Theorem1,
    Theorem2,
    Lemma1,
    Lemma2,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(value_enum)]
    pub operation: Operation,
    /// Builtin function: zero, one, t, tsq, t3, t5, t7, tN, cos:C, sin:C, sinc-pi:NU
    #[arg(long)]
    pub function: String,
    /// Lattice spacing (theorems)
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Damping/frequency parameter (lemmas)
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    #[arg(long, value_enum, default_value_t = ListFormat::Text)]
    pub format: ListFormat,
}

#[derive(Debug, Args)]
pub struct LedgerArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_enum, default_value_t = LedgerFormat::Markdown)]
    pub format: LedgerFormat,
}
