use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "bicrit",
    version,
    about = "Bicriteria budget and Pareto approximation with exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimize f2 subject to f1 <= B, with a certified factor pair.
    SolveBudget(SolveArgs),
    /// Approximate Pareto curve.
    Pareto(ParetoArgs),
    /// Reproduce a documented failure of the earlier algorithm.
    Repro(ReproArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemKind {
    Mst,
    Path,
    Cut,
    Vc,
}

impl ProblemKind {
    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Mst => "mst",
            ProblemKind::Path => "path",
            ProblemKind::Cut => "cut",
            ProblemKind::Vc => "vc",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BudgetAlgorithm {
    Sweep,
    Binary,
    Parametric,
    Fixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParetoAlgorithm {
    Grid,
    Parametric,
    Extended,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Case {
    #[value(name = "marathe-ex1")]
    MaratheEx1,
    #[value(name = "marathe-ex2")]
    MaratheEx2,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Problem kind; must match the instance file.
    #[arg(long, value_enum)]
    pub problem: ProblemKind,
    /// Instance file (JSON).
    #[arg(long)]
    pub input: PathBuf,
    /// Accuracy parameter as "p/q".
    #[arg(long, default_value = "1")]
    pub epsilon: String,
    /// Check the result against brute-force enumeration.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Evaluate grid points on a thread pool. Output is unchanged.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "sweep")]
    pub algorithm: BudgetAlgorithm,
    /// Budget on f1 as "p/q".
    #[arg(long)]
    pub budget: String,
}

#[derive(Args, Debug)]
pub struct ParetoArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "grid")]
    pub algorithm: ParetoAlgorithm,
}

#[derive(Args, Debug)]
pub struct ReproArgs {
    #[arg(long, value_enum)]
    pub case: Case,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}
