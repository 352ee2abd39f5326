//! Command-line front end for `jumpcoef`.
//!
//! The binary is a thin wrapper around [`run`], which returns the rendered
//! output and whether every requested check passed. Tests drive the same
//! entry point.

pub mod cases;
pub mod commands;
pub mod report;
pub mod suites;
pub mod svg;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::{Format, Outcome};
pub use suites::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "jumpcoef",
    version,
    about = "Jumping coefficients of multiplier ideals, computed exactly"
)]
pub struct Cli {
    /// Output format. `csv` and `svg` are only available for some commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jumping coefficients of a monomial ideal or a nondegenerate polynomial.
    Jumps {
        #[command(subcommand)]
        kind: JumpsKind,
    },
    /// Run a verification suite on golden cases and seeded random instances.
    Verify(VerifyArgs),
    /// Asymptotic jumping numbers of graded families.
    Graded {
        #[command(subcommand)]
        family: GradedKind,
    },
    /// Tyurina and Milnor numbers of a polynomial, or the Jacobian ideal check
    /// for a monomial ideal.
    Jacobian(JacobianArgs),
    /// Candidate uniform Artin-Rees numbers for a polynomial.
    Bounds(PolyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Plot {
    Svg,
    Csv,
}

#[derive(Debug, Args)]
pub struct JumpsArgs {
    /// One or two input documents; two inputs give stacked rulers.
    #[arg(required = true, num_args = 1..=2)]
    pub inputs: Vec<PathBuf>,
    /// Cutoff c_max, as "p/q".
    #[arg(long = "max", default_value = "1")]
    pub max: String,
    /// Print multiplicities (finite-colength ideals only).
    #[arg(long)]
    pub multiplicities: bool,
    /// Emit a plot instead of the text report.
    #[arg(long, value_enum)]
    pub plot: Option<Plot>,
}

#[derive(Debug, Subcommand)]
pub enum JumpsKind {
    Monomial(JumpsArgs),
    Poly {
        #[command(flatten)]
        args: JumpsArgs,
        /// Accept polynomials whose nondegeneracy was only sampled.
        #[arg(long)]
        allow_assumed: bool,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Number of random instances.
    #[arg(long, default_value_t = 20)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Run only this random instance (skips the golden cases).
    #[arg(long)]
    pub trial: Option<u64>,
    /// Extra input document checked alongside the built-in cases.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GradedKind {
    Hyperbola {
        /// Largest parameter value e, f enumerated.
        #[arg(long, default_value_t = 50)]
        window: u32,
        #[arg(long = "max", default_value = "2")]
        max: String,
        /// Cluster diagnostics at n = 1..=N, doubling the window.
        #[arg(long, default_value_t = 0)]
        clusters: u32,
        #[arg(long, default_value = "1/10")]
        epsilon: String,
    },
    Diagonal {
        /// Family document, e.g. {"type": "diagonal", "mu": ["3/2"]}.
        input: PathBuf,
        #[arg(long = "max", default_value = "3")]
        max: String,
    },
}

#[derive(Debug, Args)]
pub struct JacobianArgs {
    /// A polynomial document, or a monomial ideal document.
    pub input: PathBuf,
    /// Size of the minors for an ideal input.
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// Also print the minors.
    #[arg(long)]
    pub emit_minors: bool,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub allow_assumed: bool,
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Jumps { kind } => match kind {
            JumpsKind::Monomial(args) => commands::jumps_monomial(args, format),
            JumpsKind::Poly { args, allow_assumed } => commands::jumps_poly(args, *allow_assumed, format),
        },
        Command::Verify(args) => commands::verify(args, format),
        Command::Graded { family } => match family {
            GradedKind::Hyperbola {
                window,
                max,
                clusters,
                epsilon,
            } => commands::graded_hyperbola(*window, max, *clusters, epsilon, format),
            GradedKind::Diagonal { input, max } => commands::graded_diagonal(input, max, format),
        },
        Command::Jacobian(args) => commands::jacobian(args, format),
        Command::Bounds(args) => commands::bounds(args, format),
    }
}

/// Parses `args` (without the program name) and runs them.
pub fn run_args<I, S>(args: I) -> anyhow::Result<Outcome>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("jumpcoef")).chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv)?;
    run(&cli)
}
