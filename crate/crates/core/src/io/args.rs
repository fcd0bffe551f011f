//! Command-line flags. Every subcommand's flags double as the keys of the
//! `parameters` map in a JSON run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "eca", version, about = "Equi-centro-affine extremal curves on spheres")]
pub struct Cli {
    /// JSON run configuration; flags on the command line take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Write the result to this file instead of standard output.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,

    /// Output format (json, csv, svg or text, depending on the command).
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// More diagnostics on stderr; repeat for debug output.
    #[arg(long, short = 'v', global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Option<CommandArgs>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Svg,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum MethodChoice {
    Quad,
    Elliptic,
    Series,
    All,
}

#[derive(Debug, Clone, Subcommand)]
pub enum CommandArgs {
    /// Admissibility boundary C₂ = D(C₁) as CSV.
    Domain(DomainArgs),
    /// Progression angle at one parameter point.
    Angle(AngleArgs),
    /// Progression angle over a range of C₂.
    Sweep(SweepArgs),
    /// C₂ for which the curve closes after q periods with p turns.
    Closure(ClosureArgs),
    /// Reconstruct a closed curve on the sphere.
    Trace(TraceArgs),
    /// Second variation at the critical circle, or the area-constrained test.
    Stability(StabilityArgs),
    /// Isoparametric extremal hypersurfaces up to a given dimension.
    Classify(ClassifyArgs),
    /// Quadrature, closed form, four-term series and large-C₂ expansion side by side.
    SeriesCompare(SeriesCompareArgs),
    /// Equality case of the isoperimetric inequality on circles.
    Isoperimetric(IsoperimetricArgs),
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainArgs {
    #[arg(long = "R")]
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[arg(long = "C1-min", allow_negative_numbers = true)]
    #[serde(rename = "C1-min", skip_serializing_if = "Option::is_none")]
    pub c1_min: Option<f64>,
    #[arg(long = "C1-max", allow_negative_numbers = true)]
    #[serde(rename = "C1-max", skip_serializing_if = "Option::is_none")]
    pub c1_max: Option<f64>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AngleArgs {
    #[arg(long = "R")]
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[arg(long = "C1", allow_negative_numbers = true)]
    #[serde(rename = "C1", skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
    #[arg(long = "C2", allow_negative_numbers = true)]
    #[serde(rename = "C2", skip_serializing_if = "Option::is_none")]
    pub c2: Option<f64>,
    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<MethodChoice>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepArgs {
    #[arg(long = "R")]
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[arg(long = "C1", allow_negative_numbers = true)]
    #[serde(rename = "C1", skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
    /// Defaults to just above the admissibility threshold.
    #[arg(long = "C2-min", allow_negative_numbers = true)]
    #[serde(rename = "C2-min", skip_serializing_if = "Option::is_none")]
    pub c2_min: Option<f64>,
    #[arg(long = "C2-max", allow_negative_numbers = true)]
    #[serde(rename = "C2-max", skip_serializing_if = "Option::is_none")]
    pub c2_max: Option<f64>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<MethodChoice>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosureArgs {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[arg(long = "C1", allow_negative_numbers = true)]
    #[serde(rename = "C1", skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
    #[arg(long = "R")]
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[arg(long = "samples-per-period")]
    #[serde(rename = "samples-per-period", skip_serializing_if = "Option::is_none")]
    pub samples_per_period: Option<usize>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceArgs {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[arg(long = "C1", allow_negative_numbers = true)]
    #[serde(rename = "C1", skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
    #[arg(long = "R")]
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    /// Trace this C₂ for q periods instead of searching for closure.
    #[arg(long = "C2", allow_negative_numbers = true)]
    #[serde(rename = "C2", skip_serializing_if = "Option::is_none")]
    pub c2: Option<f64>,
    #[arg(long = "samples-per-period")]
    #[serde(rename = "samples-per-period", skip_serializing_if = "Option::is_none")]
    pub samples_per_period: Option<usize>,
    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<OutputFormat>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StabilityArgs {
    #[arg(long = "R")]
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    /// Fourier coefficients "a0,a1,b1,a2,b2,…" of the perturbation.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modes: Option<String>,
    /// z = B³/R² for the area-constrained test.
    #[arg(long, allow_negative_numbers = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<f64>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyArgs {
    #[arg(long = "n-max")]
    #[serde(rename = "n-max", skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesCompareArgs {
    #[arg(long = "C2-min")]
    #[serde(rename = "C2-min", skip_serializing_if = "Option::is_none")]
    pub c2_min: Option<f64>,
    #[arg(long = "C2-max")]
    #[serde(rename = "C2-max", skip_serializing_if = "Option::is_none")]
    pub c2_max: Option<f64>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsoperimetricArgs {
    /// A single colatitude; without it a table over (0, π/2) is produced.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<f64>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
}
