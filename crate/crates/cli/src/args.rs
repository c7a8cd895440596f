use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use slkkm_core::geometry::Openness;
use slkkm_core::scalar::parse_scalar;
use slkkm_core::Scalar;

fn scalar_arg(text: &str) -> Result<Scalar, String> {
    parse_scalar(text).map_err(|_| format!("{text:?} is not a rational like 1/4"))
}

#[derive(Debug, Parser)]
#[command(
    name = "slkkm",
    version,
    about = "Exact tools for colorings of the cube with no color on opposite faces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a document and check it: boundary condition for colorings,
    /// covering property for covers.
    Validate(ValidateArgs),
    /// Emit a built-in coloring as a document.
    Construct(ConstructArgs),
    /// Lower and upper bounds on the forced number of colors.
    Bounds(BoundsArgs),
    /// Exact maximum number of colors met by one ball.
    Search(SearchArgs),
    /// Check the main lower bound on a coloring.
    Verify(VerifyArgs),
    /// Run the growth/pigeonhole/clamp argument and report its witness.
    Pipeline(PipelineArgs),
    /// Extend a colored proximate point set and check the point-set bound.
    Sperner(SpernerArgs),
    /// Anneal for a coloring with few colors per ball.
    Extremal(ExtremalArgs),
    /// Open and closed maxima over a list of radii.
    Curve(CurveArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Validate(_) => "validate",
            Self::Construct(_) => "construct",
            Self::Bounds(_) => "bounds",
            Self::Search(_) => "search",
            Self::Verify(_) => "verify",
            Self::Pipeline(_) => "pipeline",
            Self::Sperner(_) => "sperner",
            Self::Extremal(_) => "extremal",
            Self::Curve(_) => "curve",
        }
    }

    pub fn output(&self) -> &OutputArgs {
        match self {
            Self::Validate(a) => &a.output,
            Self::Construct(a) => &a.output,
            Self::Bounds(a) => &a.output,
            Self::Search(a) => &a.output,
            Self::Verify(a) => &a.output,
            Self::Pipeline(a) => &a.output,
            Self::Sperner(a) => &a.output,
            Self::Extremal(a) => &a.output,
            Self::Curve(a) => &a.output,
        }
    }

    /// The document read by this command, if any.
    pub fn input(&self) -> Option<&PathBuf> {
        match self {
            Self::Validate(a) => Some(&a.input),
            Self::Search(a) => a.source.input.as_ref(),
            Self::Verify(a) => a.source.input.as_ref(),
            Self::Pipeline(a) => a.source.input.as_ref(),
            Self::Sperner(a) => Some(&a.input),
            Self::Curve(a) => a.source.input.as_ref(),
            Self::Construct(_) | Self::Bounds(_) | Self::Extremal(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report here; a `.csv` name selects CSV for table output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Add wall-clock time to the report. Off by default so that reports
    /// are reproducible byte for byte.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Orthant,
    Hamming,
    Brick,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Coloring document to read.
    #[arg(long = "in", conflicts_with = "construct", required_unless_present = "construct")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub construct: Option<Construction>,
    /// Dimension of the construction.
    #[arg(long)]
    pub d: Option<usize>,
    /// Brick width.
    #[arg(long, value_parser = scalar_arg, default_value = "1/2")]
    pub sigma: Scalar,
}

#[derive(Debug, Args)]
pub struct BallArgs {
    #[arg(long, conflicts_with = "closed")]
    pub open: bool,
    #[arg(long)]
    pub closed: bool,
}

impl BallArgs {
    /// Open unless `--closed` is given.
    pub fn openness(&self) -> Openness {
        if self.closed {
            Openness::Closed
        } else {
            Openness::Open
        }
    }
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub construct: Construction,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, value_parser = scalar_arg, default_value = "1/2")]
    pub sigma: Scalar,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_parser = scalar_arg)]
    pub eps: Scalar,
    /// Also report the point-set bound for this proximity.
    #[arg(long, value_parser = scalar_arg)]
    pub rho: Option<Scalar>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_parser = scalar_arg)]
    pub eps: Scalar,
    #[command(flatten)]
    pub ball: BallArgs,
    /// Cross-check against a brute-force scan on this grid spacing.
    #[arg(long, value_parser = scalar_arg)]
    pub grid_step: Option<Scalar>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_parser = scalar_arg)]
    pub eps: Scalar,
    #[command(flatten)]
    pub ball: BallArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_parser = scalar_arg)]
    pub eps: Scalar,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SpernerArgs {
    /// A `points` document.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_parser = scalar_arg)]
    pub rho: Scalar,
    #[arg(long, value_parser = scalar_arg)]
    pub eps: Scalar,
    #[command(flatten)]
    pub ball: BallArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_parser = scalar_arg)]
    pub eps: Scalar,
    /// Annealing steps per restart.
    #[arg(long, default_value_t = 2000)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub restarts: Option<usize>,
    /// Search with open balls; closed is the default here.
    #[arg(long)]
    pub open: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Comma-separated increasing radii, e.g. `1/10,1/4,1/2`.
    #[arg(long, value_parser = scalar_arg, value_delimiter = ',', required = true)]
    pub eps_list: Vec<Scalar>,
    #[command(flatten)]
    pub output: OutputArgs,
}
