//! `superorbit`: reachability, strong reachability and the Panyushev property
//! of nilpotent orbits in basic classical Lie superalgebras.

mod cache;
mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit status when every checked claim holds.
pub const EXIT_OK: u8 = 0;
/// Exit status when a counterexample was found.
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
/// Exit status for usage errors.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "superorbit", version, about = "Nilpotent orbit invariants of Lie superalgebras in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one nilpotent orbit.
    Analyze(AnalyzeArgs),
    /// Analyze every orbit of a family up to a size bound.
    Enumerate(EnumerateArgs),
    /// Print the classification tables of D(2,1;α), G(3) and F(4).
    Tables(TablesArgs),
    /// Check a claim over a range of algebras.
    Verify(VerifyArgs),
}

/// Algebra selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    #[value(name = "gl")]
    Gl,
    #[value(name = "sl")]
    Sl,
    #[value(name = "psl")]
    Psl,
    #[value(name = "osp")]
    Osp,
    #[value(name = "D21", alias = "d21")]
    D21,
    #[value(name = "G3", alias = "g3")]
    G3,
    #[value(name = "F4", alias = "f4")]
    F4,
}

/// Matrix family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Gl,
    Sl,
    Psl,
    Osp,
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Json,
    #[value(alias = "markdown")]
    Md,
    #[default]
    Ascii,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long, value_enum)]
    pub algebra: AlgebraArg,
    /// Super-partition "p1,p2,...|q1,q2,..." for gl, sl, psl and osp.
    #[arg(long, conflicts_with = "orbit")]
    pub partition: Option<String>,
    /// Orbit label as printed in the tables, e.g. "E+x2" or "R(e1,e0)+R(e2,e3)".
    #[arg(long)]
    pub orbit: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// α for D(2,1;α): "symbolic" or a rational such as "2" or "-1/3".
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub alpha: String,
    /// Also compute the center of the centralizer.
    #[arg(long)]
    pub center: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum, visible_alias = "family")]
    pub algebra: FamilyArg,
    /// Size bound: m+n for gl and sl, n for psl(n|n), m+2n for osp(m|2n).
    #[arg(long)]
    pub max: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// Directory for d21, g3 and f4 table files (default: standard output).
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "md")]
    pub format: Format,
    /// α for D(2,1;α): "symbolic" or a rational.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub alpha: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Claim to check: theorem1, theorem2, dims, dim-psl, center, theorem4,
    /// theorem5, osp-derived, jacobi or commutators.
    pub claim: String,
    /// Restrict the sweep to one family.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Size bound for `--family` (defaults to the full range bound of that family).
    #[arg(long)]
    pub max: Option<usize>,
    /// Bound on n for psl(n|n).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Exceptional algebra for `jacobi` and `commutators`.
    #[arg(long, value_enum)]
    pub algebra: Option<AlgebraArg>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// α for D(2,1;α): "symbolic" or a rational.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub alpha: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match commands::run(&cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.counterexamples { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
