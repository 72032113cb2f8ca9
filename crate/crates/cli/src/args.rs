use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use zerosum::arith::parse_ratio;
use zerosum::Rational;

use crate::report::Format;

/// Exact bounds, extremal weightings and oracles for zero-sum hypergraph weightings.
///
/// Exit status: 0 success, 1 invalid input, 2 no feasible weighting,
/// 3 instance over an oracle budget, 4 verification failure.
/// ZS_THREADS caps the number of worker threads.
#[derive(Debug, Parser)]
#[command(name = "zerosum", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an upper bound on the maximum unbalancedness.
    Bound(BoundArgs),
    /// Build an explicit zero-sum weighting and evaluate it.
    Construct(ConstructArgs),
    /// Compute the exact maximum with one of the oracles.
    Solve(SolveArgs),
    /// Run a property suite and report each check.
    Verify(VerifyArgs),
    /// Sweep a parameter grid and print one row per instance.
    Table(TableArgs),
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_ratio(s).ok_or_else(|| format!("expected p/q or an integer, got {s:?}"))
}

fn bigint(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    /// `K_n^r`; needs --n and --r.
    Complete,
    /// `r`-partite, classes of size --n, --e edges.
    Equipartite,
    /// Complete equipartite `K(r; n)`.
    CompletePartite,
    /// Regular equipartite, degree density --D and parameter --alpha.
    BaloghSmyth,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(value_enum)]
    pub kind: BoundKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    /// Edge count (equipartite).
    #[arg(long, value_parser = bigint)]
    pub e: Option<BigInt>,
    /// Degree density (balogh-smyth).
    #[arg(long = "D", value_parser = rational)]
    pub d: Option<Rational>,
    /// Parameter in [-1, 1] (balogh-smyth).
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    /// Majority on `K_n^r` with the first ceil(n/2) vertices positive.
    Majority,
    /// Majority on `K(r; n)`; odd r, even n.
    EquipartiteMajority,
    /// Edges of `K(r; n)` with |w| >= k; 4 divides n.
    EquipartiteThreshold,
    /// Level weighting on `K_n^r` at the best split.
    Optimal,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: ConstructKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub k: Option<usize>,
    /// Write PREFIX.hypergraph.json and PREFIX.weighting.json.
    #[arg(long, value_name = "PREFIX")]
    pub emit: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    /// All balanced ±1 weightings.
    Enumerate,
    /// One exact linear program per vertex sign pattern.
    Lp,
    /// Level structure of complete hypergraphs.
    Reduced,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["complete", "equipartite", "file"])))]
pub struct SolveArgs {
    #[arg(value_enum)]
    pub method: SolveMethod,
    /// `K_n^r`.
    #[arg(long, num_args = 2, value_names = ["N", "R"])]
    pub complete: Option<Vec<usize>>,
    /// `K(r; n)`.
    #[arg(long, num_args = 2, value_names = ["R", "N"])]
    pub equipartite: Option<Vec<usize>>,
    /// Hypergraph JSON file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Write the witness to PREFIX.weighting.json (and the hypergraph next to it).
    #[arg(long, value_name = "PREFIX")]
    pub emit: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Coordinate shifts on product measures.
    Shifts,
    /// Monotonicity of the split function, chi symmetry and the bound identity.
    Monotonicity,
    /// Averaging over edge classes, and the cube projection.
    Symmetry,
    /// Exact LP maxima against the complete bound.
    OracleVsBound,
    /// Constructions against the bounds they meet.
    Constructions,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Seed for the ChaCha8 generator of random suites.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Random instances (shifts: 1000, symmetry: 500).
    #[arg(long)]
    pub trials: Option<usize>,
    /// Largest n (monotonicity: 30, oracle-vs-bound: 6, constructions: 12).
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Largest r (monotonicity: 8, constructions: 5; shifts: 6).
    #[arg(long)]
    pub r_max: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `K_n^r` for each (n, r) with r <= n.
    Complete,
    /// `K(r; n)` for each (r, n).
    Equipartite,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value_t = Family::Complete)]
    pub family: Family,
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    #[arg(long, default_value_t = 2)]
    pub r_min: usize,
    #[arg(long, default_value_t = 4)]
    pub r_max: usize,
    /// Run the LP oracle on instances with at most this many vertices.
    #[arg(long, default_value_t = 6)]
    pub lp_max_vertices: usize,
    /// Degree density for the Balogh-Smyth column.
    #[arg(long = "D", value_parser = rational, default_value = "1")]
    pub d: Rational,
    /// Parameter for the Balogh-Smyth column.
    #[arg(long, value_parser = rational, default_value = "0", allow_hyphen_values = true)]
    pub alpha: Rational,
}
