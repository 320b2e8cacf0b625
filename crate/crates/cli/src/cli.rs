//! Command-line argument definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Worst-case loss analysis for passive optical crossbars on chip.
///
/// Pitches are given in millimetres and die areas in square centimetres;
/// results are reported in centimetres and decibels.
#[derive(Debug, Parser)]
#[command(name = "oxbar", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the worst-case loss of one implementation
    Evaluate(EvaluateArgs),
    /// Count the photonic devices and wavelengths a topology needs
    Resources(ResourcesArgs),
    /// Construct and export a ring wavelength assignment
    Assign(AssignArgs),
    /// Sweep the worst-case loss over array size or interface pitch
    Sweep(SweepArgs),
    /// Compute the break-even frontier between two implementations
    Frontier(FrontierArgs),
    /// Cross-check the closed-form formulas against brute-force models
    Verify(VerifyArgs),
    /// List the built-in technology presets
    Presets(PresetsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CrossingModelArg {
    /// Layout-extra crossings taken as zero (flagged in the output)
    ZeroExtra,
    /// +51 crossings for layout B at n = 8; other layout-B sizes error
    CalibratedN8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    /// Vary the array side at fixed die area
    N,
    /// Vary the interface pitch at fixed array side
    Pitch,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TechArgs {
    /// Technology preset name (case-insensitive); see `oxbar presets`
    #[arg(long)]
    pub preset: Option<String>,
    /// Waveguide crossing loss in dB (use with --p-propagation and --p-drop)
    #[arg(long)]
    pub p_crossing: Option<f64>,
    /// Propagation loss in dB/cm
    #[arg(long)]
    pub p_propagation: Option<f64>,
    /// Drop loss in dB
    #[arg(long)]
    pub p_drop: Option<f64>,
    /// JSON config file defining extra presets
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Implementation name: matrix-a, matrix-b, lambda-router-a,
    /// lambda-router-b, snake-a, snake-b, ornoc-c, ornoc-ccc
    #[arg(long)]
    pub topology: String,
    /// Side of the core array (even, >= 2)
    #[arg(long)]
    pub n: u64,
    /// Interface pitch in mm (mutually exclusive with --die-area)
    #[arg(long)]
    pub pitch: Option<f64>,
    /// Die area in cm^2; the pitch becomes sqrt(area)/n
    #[arg(long)]
    pub die_area: Option<f64>,
    #[command(flatten)]
    pub tech: TechArgs,
    /// Layout-extra crossing model
    #[arg(long, value_enum, default_value_t = CrossingModelArg::CalibratedN8)]
    pub crossing_model: CrossingModelArg,
    /// Substitute zero-extra where the crossing model is uncalibrated
    /// (default is to fail)
    #[arg(long)]
    pub lenient: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ResourcesArgs {
    /// Topology name: matrix, lambda-router, snake, ornoc-c, ornoc-ccc
    #[arg(long)]
    pub topology: String,
    /// Side of the core array (even, >= 2)
    #[arg(long)]
    pub n: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AssignArgs {
    /// Ring mode: c (single direction) or ccc (both directions)
    #[arg(long)]
    pub mode: String,
    /// Number of ring ports
    #[arg(long)]
    pub ports: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Swept axis
    #[arg(long, value_enum)]
    pub axis: AxisArg,
    /// Die area in cm^2 (n-axis sweeps)
    #[arg(long)]
    pub die_area: Option<f64>,
    /// Array sides to sweep, comma separated (n-axis sweeps)
    #[arg(long, value_delimiter = ',')]
    pub n_values: Vec<u64>,
    /// Fixed array side (pitch-axis sweeps)
    #[arg(long)]
    pub n: Option<u64>,
    /// Pitches to sweep in mm, comma separated (pitch-axis sweeps)
    #[arg(long, value_delimiter = ',')]
    pub pitch_values: Vec<f64>,
    /// Implementations to evaluate, comma separated, or `all`
    #[arg(long, value_delimiter = ',')]
    pub topologies: Vec<String>,
    #[command(flatten)]
    pub tech: TechArgs,
    /// Layout-extra crossing model
    #[arg(long, value_enum, default_value_t = CrossingModelArg::CalibratedN8)]
    pub crossing_model: CrossingModelArg,
    /// Substitute zero-extra where the crossing model is uncalibrated
    #[arg(long)]
    pub lenient: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FrontierArgs {
    /// First implementation
    #[arg(long = "a")]
    pub impl_a: String,
    /// Second implementation
    #[arg(long = "b")]
    pub impl_b: String,
    /// Side of the core array (even, >= 2)
    #[arg(long)]
    pub n: u64,
    /// Interface pitch in mm
    #[arg(long)]
    pub pitch: f64,
    /// Drop loss pinned by the frontier context, in dB
    #[arg(long)]
    pub p_drop: f64,
    /// Layout-extra crossing model
    #[arg(long, value_enum, default_value_t = CrossingModelArg::CalibratedN8)]
    pub crossing_model: CrossingModelArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest even array side to verify (2..=8)
    #[arg(long, default_value_t = 8)]
    pub max_n: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PresetsArgs {
    #[command(flatten)]
    pub output: OutputArgs,
}
