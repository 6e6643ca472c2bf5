use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Exact classification queries for the Painlevé families.
///
/// Families are named I, II, III, IV, V, VI. Parameters are comma-separated
/// values such as "1/2", "tau1 + 1/3" or "-tau2 - tau3"; names tauN denote
/// transcendental atoms and algN algebraic irrational atoms.
#[derive(Debug, Parser)]
#[command(name = "painleve", version, after_help = EXIT_CODES, args_conflicts_with_subcommands = true)]
pub struct Cli {
    /// Emit JSON (the only output format; accepted for scripting).
    #[arg(long, global = true)]
    pub json: bool,

    /// Run one query per line of FILE and print a JSON array.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

pub const EXIT_CODES: &str = "Exit codes: 0 success, 1 I/O failure, 2 input error, \
3 primary verdict unknown or open.";

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Morley rank and degree, strata, algebraic solutions, triviality.
    Classify(ClassifyArgs),
    /// Decide whether two parameter points lie in one Bäcklund orbit.
    Orbit(OrbitArgs),
    /// Orthogonality verdict for the generic types of two equations.
    Orthogonal(OrthogonalArgs),
    /// Symbolic verification of catalogued identities.
    Verify(VerifyArgs),
    /// Integrate a family numerically and report the residual.
    #[command(after_help = CSV_HELP)]
    Integrate(IntegrateArgs),
    /// List the atoms occurring in parameter strings.
    Atoms(AtomsArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub params: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OrbitArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, allow_hyphen_values = true)]
    pub v: String,
    #[arg(long, allow_hyphen_values = true)]
    pub w: String,
    /// Maximum word length for the bounded search.
    #[arg(long, default_value_t = painleve_core::weyl::DEFAULT_WORD_BOUND)]
    pub bound: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OrthogonalArgs {
    #[arg(long)]
    pub left_family: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub left_params: String,
    #[arg(long)]
    pub right_family: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub right_params: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyTarget {
    Riccati,
    PvChange,
    GroupRelations,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    pub target: VerifyTarget,
    /// Riccati sign +1 or -1; both when omitted.
    #[arg(long, allow_hyphen_values = true, value_parser = ["1", "+1", "-1"])]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrajectoryFormat {
    Csv,
    Json,
}

pub const CSV_HELP: &str = "CSV columns: t, then the state in system order: \
y, y' for scalar variants; q, p for qp; Q, P for QP. One row per accepted step.";

#[derive(Debug, Clone, Args, Serialize)]
pub struct IntegrateArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub params: String,
    /// Numeric values for atoms or system symbols, e.g. "tau1=0.3, alg1=1.41".
    #[arg(long, default_value = "")]
    pub assign: String,
    /// System variant: scalar, qp or QP (family dependent).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    /// Comma-separated initial state.
    #[arg(long, allow_hyphen_values = true)]
    pub initial: String,
    #[arg(long, allow_hyphen_values = true)]
    pub t0: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub t1: f64,
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    /// Trajectory file; the trajectory is embedded in the response when omitted.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = TrajectoryFormat::Csv)]
    pub format: TrajectoryFormat,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct AtomsArgs {
    /// Parameter strings; atoms are collected across all of them.
    #[arg(long, allow_hyphen_values = true, required = true)]
    pub params: Vec<String>,
}
