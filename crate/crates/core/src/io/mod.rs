//! Command-line front end: run configuration, dispatch to the numerical
//! modules, and artifact output.

pub mod args;
pub mod format;
pub mod golden;
pub mod svg;

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, TAU};
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::angle::{
    angle_elliptic, angle_quadrature, angle_series_large_c2, angle_series_truncated, sweep_c2, AngleMethod, AngleResult,
};
use crate::classify::{classify_all, ClassEntry};
use crate::cubic::{admissible_lower_bound, offset_above_bound, CurveParams};
use crate::error::{Error, Result};
use crate::par;
use crate::stability::{
    area_preserving_q, circle_second_variation, critical_circle, is_area_stable, second_variation_quadrature,
    FourierPerturbation, SCANNED_MODES,
};
use crate::trace::{closure_search, integrate_profile, isoperimetric_check, lobe_count, trace_curve, SphereTrace};

pub use args::{Cli, CommandArgs, MethodChoice, OutputFormat};
pub use format::{fmt_f64, to_json, write_atomic, Table};
pub use golden::{GoldenEntry, GoldenStore, Provenance};
pub use svg::{emit_svg, render_svg, View};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Domain,
    Angle,
    Sweep,
    Closure,
    Trace,
    Stability,
    Classify,
    SeriesCompare,
    Isoperimetric,
}

/// One run of the program: the command, its parameters keyed by flag name,
/// and where and how to write the result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default)]
    pub parameters: BTreeMap<String, Value>,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub output_format: Option<OutputFormat>,
}

/// Default number of RK4 steps per curvature period for traces.
pub const DEFAULT_SAMPLES_PER_PERIOD: usize = 4000;

fn command_parts(args: &CommandArgs) -> Result<(Command, Value)> {
    let (command, value) = match args {
        CommandArgs::Domain(a) => (Command::Domain, serde_json::to_value(a)?),
        CommandArgs::Angle(a) => (Command::Angle, serde_json::to_value(a)?),
        CommandArgs::Sweep(a) => (Command::Sweep, serde_json::to_value(a)?),
        CommandArgs::Closure(a) => (Command::Closure, serde_json::to_value(a)?),
        CommandArgs::Trace(a) => (Command::Trace, serde_json::to_value(a)?),
        CommandArgs::Stability(a) => (Command::Stability, serde_json::to_value(a)?),
        CommandArgs::Classify(a) => (Command::Classify, serde_json::to_value(a)?),
        CommandArgs::SeriesCompare(a) => (Command::SeriesCompare, serde_json::to_value(a)?),
        CommandArgs::Isoperimetric(a) => (Command::Isoperimetric, serde_json::to_value(a)?),
    };
    Ok((command, value))
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self { command, parameters: BTreeMap::new(), output_path: None, output_format: None }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Domain(format!("config {}: {e}", path.display())))
    }

    /// Combines the optional config file with the command-line flags, the
    /// flags taking precedence.
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let file = cli.config.as_deref().map(Self::load).transpose()?;
        let flags = cli.command.as_ref().map(command_parts).transpose()?;
        let mut config = match (file, flags) {
            (None, None) => return Err(Error::Domain("no command given".into())),
            (Some(file), None) => file,
            (file, Some((command, flags))) => {
                let mut config = match file {
                    Some(f) if f.command != command => {
                        return Err(Error::Domain(format!(
                            "config file is for {:?} but {:?} was requested",
                            f.command, command
                        )))
                    }
                    Some(f) => f,
                    None => Self::new(command),
                };
                if let Value::Object(map) = flags {
                    config.parameters.extend(map);
                }
                config
            }
        };
        if cli.output.is_some() {
            config.output_path = cli.output.clone();
        }
        if cli.format.is_some() {
            config.output_format = cli.format;
        }
        Ok(config)
    }

    fn params<T: DeserializeOwned>(&self) -> Result<T> {
        let map: serde_json::Map<String, Value> = self.parameters.clone().into_iter().collect();
        serde_json::from_value(Value::Object(map))
            .map_err(|e| Error::Domain(format!("invalid parameters for {:?}: {e}", self.command)))
    }

    /// Explicit format, else the output file's extension, else `fallback`.
    fn format_or(&self, fallback: OutputFormat) -> OutputFormat {
        self.output_format
            .or_else(|| {
                let ext = self.output_path.as_ref()?.extension()?.to_str()?.to_ascii_lowercase();
                match ext.as_str() {
                    "json" => Some(OutputFormat::Json),
                    "csv" => Some(OutputFormat::Csv),
                    "svg" => Some(OutputFormat::Svg),
                    "txt" => Some(OutputFormat::Text),
                    _ => None,
                }
            })
            .unwrap_or(fallback)
    }
}

/// The bytes a command produces, before they are written out.
#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub format: OutputFormat,
    pub contents: String,
}

fn unsupported(command: Command, format: OutputFormat) -> Error {
    // The serialized names are the ones used on the command line.
    let name = |v: serde_json::Result<serde_json::Value>| {
        v.ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
    };
    Error::Domain(format!(
        "{} cannot be written as {}",
        name(serde_json::to_value(command)),
        name(serde_json::to_value(format))
    ))
}

fn positive(name: &str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain(format!("{name} must be positive and finite, got {value}")))
    }
}

fn finite(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain(format!("{name} must be finite")))
    }
}

fn required<T>(name: &str, value: Option<T>) -> Result<T> {
    value.ok_or_else(|| Error::Domain(format!("--{name} is required")))
}

/// `points` equally spaced values from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 || !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!(
            "need at least two points on a finite range with min < max, got {points} on [{lo}, {hi}]"
        )));
    }
    let step = (hi - lo) / (points - 1) as f64;
    Ok((0..points).map(|i| if i + 1 == points { hi } else { lo + i as f64 * step }).collect())
}

fn table_artifact(table: &Table, format: OutputFormat, command: Command) -> Result<Artifact> {
    let contents = match format {
        OutputFormat::Csv => table.to_csv(),
        OutputFormat::Json => table.to_json()?,
        other => return Err(unsupported(command, other)),
    };
    Ok(Artifact { format, contents })
}

fn json_artifact<T: Serialize>(value: &T, format: OutputFormat, command: Command) -> Result<Artifact> {
    if format != OutputFormat::Json {
        return Err(unsupported(command, format));
    }
    Ok(Artifact { format, contents: to_json(value)? })
}

fn single_angle(params: &CurveParams, method: MethodChoice) -> Result<AngleResult> {
    match method {
        MethodChoice::Quad => angle_quadrature(params),
        MethodChoice::Elliptic => angle_elliptic(params),
        MethodChoice::Series => angle_series_large_c2(params),
        MethodChoice::All => Err(Error::Domain("a single method is required here".into())),
    }
}

fn angle_method(method: MethodChoice) -> Result<AngleMethod> {
    match method {
        MethodChoice::Quad => Ok(AngleMethod::Quadrature),
        MethodChoice::Elliptic => Ok(AngleMethod::Elliptic),
        MethodChoice::Series => Ok(AngleMethod::Series),
        MethodChoice::All => Err(Error::Domain("sweep takes a single method".into())),
    }
}

fn run_domain(config: &RunConfig) -> Result<Artifact> {
    let a: args::DomainArgs = config.params()?;
    let radius = positive("R", a.radius.unwrap_or(1.0))?;
    let c1s = linspace(a.c1_min.unwrap_or(-10.0), a.c1_max.unwrap_or(30.0), a.points.unwrap_or(401))?;
    let bounds = par::map(&c1s, |&c1| admissible_lower_bound(c1, radius));
    let mut table = Table::new(&["C1", "D_C2"]);
    for (c1, d) in c1s.into_iter().zip(bounds) {
        table.push(vec![c1, d]);
    }
    table_artifact(&table, config.format_or(OutputFormat::Csv), config.command)
}

fn run_angle(config: &RunConfig) -> Result<Artifact> {
    let a: args::AngleArgs = config.params()?;
    let params = CurveParams::new(
        positive("R", a.radius.unwrap_or(1.0))?,
        finite("C1", a.c1.unwrap_or(0.0))?,
        finite("C2", required("C2", a.c2)?)?,
    )?;
    let format = config.format_or(OutputFormat::Json);
    match a.method.unwrap_or(MethodChoice::Elliptic) {
        MethodChoice::All => {
            let mut results = vec![angle_quadrature(&params)?, angle_elliptic(&params)?];
            match angle_series_large_c2(&params) {
                Ok(r) => results.push(r),
                Err(e) if e.is_domain() => log::warn!("series omitted: {e}"),
                Err(e) => return Err(e),
            }
            json_artifact(&results, format, config.command)
        }
        method => json_artifact(&single_angle(&params, method)?, format, config.command),
    }
}

fn run_sweep(config: &RunConfig) -> Result<Artifact> {
    let a: args::SweepArgs = config.params()?;
    let radius = positive("R", a.radius.unwrap_or(1.0))?;
    let c1 = finite("C1", a.c1.unwrap_or(0.0))?;
    let method = angle_method(a.method.unwrap_or(MethodChoice::Elliptic))?;
    let lo = a.c2_min.unwrap_or_else(|| offset_above_bound(c1, radius, 1e-3));
    let c2s = linspace(lo, a.c2_max.unwrap_or(100.0), a.points.unwrap_or(200))?;
    let results = sweep_c2(c1, radius, &c2s, method);
    let mut table = Table::new(&["C2", "lambda_theta"]);
    for (c2, r) in c2s.into_iter().zip(results) {
        table.push(vec![c2, r?.lambda_theta]);
    }
    table_artifact(&table, config.format_or(OutputFormat::Csv), config.command)
}

#[derive(Debug, Clone, Serialize)]
struct ClosureReport {
    p: u64,
    q: u64,
    #[serde(rename = "C1")]
    c1: f64,
    #[serde(rename = "R")]
    radius: f64,
    #[serde(rename = "C2")]
    c2: f64,
    lambda_theta: f64,
    target: f64,
    angle_residual: f64,
    closure_gap: f64,
    winding_theta: f64,
    rotation_index: Option<i64>,
    lobes: Option<usize>,
    max_frame_drift: f64,
}

/// Closes the (p, q) curve and traces it over q periods.
fn closed_trace(p: u64, q: u64, c1: f64, radius: f64, samples: usize) -> Result<(CurveParams, SphereTrace)> {
    let params = closure_search(p, q, c1, radius)?;
    Ok((params, trace_params(&params, q, samples)?))
}

fn trace_params(params: &CurveParams, q: u64, samples: usize) -> Result<SphereTrace> {
    if samples == 0 {
        return Err(Error::Domain("samples-per-period must be positive".into()));
    }
    let step = crate::angle::period(params)? / samples as f64;
    let profile = integrate_profile(params, q as usize, step)?;
    trace_curve(&profile, q as usize)
}

fn run_closure(config: &RunConfig) -> Result<Artifact> {
    let a: args::ClosureArgs = config.params()?;
    let (p, q) = (required("p", a.p)?, required("q", a.q)?);
    let radius = positive("R", a.radius.unwrap_or(1.0))?;
    let c1 = finite("C1", a.c1.unwrap_or(0.0))?;
    let samples = a.samples_per_period.unwrap_or(DEFAULT_SAMPLES_PER_PERIOD);
    let (params, trace) = closed_trace(p, q, c1, radius, samples)?;
    let lambda_theta = angle_elliptic(&params)?.lambda_theta;
    let target = TAU * p as f64 / q as f64;
    let report = ClosureReport {
        p,
        q,
        c1,
        radius,
        c2: params.c2,
        lambda_theta,
        target,
        angle_residual: lambda_theta - target,
        closure_gap: trace.closure_gap,
        winding_theta: trace.winding_theta,
        rotation_index: trace.rotation_index,
        lobes: lobe_count(&trace).ok(),
        max_frame_drift: trace.max_frame_drift,
    };
    json_artifact(&report, config.format_or(OutputFormat::Json), config.command)
}

/// Columns of the trace CSV.
pub const TRACE_COLUMNS: [&str; 6] = ["s", "x", "y", "z", "B", "kappa_g"];

pub fn trace_table(trace: &SphereTrace) -> Table {
    let mut table = Table::new(&TRACE_COLUMNS);
    for p in &trace.points {
        table.push(vec![p.s, p.x[0], p.x[1], p.x[2], p.b, p.kappa_g()]);
    }
    table
}

/// Closure gap and rotation index recovered from a trace CSV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceSummary {
    pub radius: f64,
    pub closure_gap: f64,
    pub winding_theta: f64,
    pub rotation_index: Option<i64>,
}

pub fn summarize_trace_csv(text: &str) -> Result<TraceSummary> {
    let table = Table::from_csv(text)?;
    if table.header != TRACE_COLUMNS {
        return Err(Error::Domain(format!("unexpected trace columns {:?}", table.header)));
    }
    let points: Vec<[f64; 3]> = table.rows.iter().map(|r| [r[1], r[2], r[3]]).collect();
    let (first, last) = match (points.first(), points.last()) {
        (Some(f), Some(l)) if points.len() > 1 => (*f, *l),
        _ => return Err(Error::Domain("trace CSV has fewer than two points".into())),
    };
    let radius = first.iter().map(|c| c * c).sum::<f64>().sqrt();
    let closure_gap = first.iter().zip(&last).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
    let winding_theta = crate::trace::azimuth_winding(points);
    Ok(TraceSummary {
        radius,
        closure_gap,
        winding_theta,
        rotation_index: crate::trace::closed_index(winding_theta, closure_gap, radius),
    })
}

#[derive(Debug, Clone, Serialize)]
struct TraceJson {
    #[serde(rename = "C1")]
    c1: f64,
    #[serde(rename = "C2")]
    c2: f64,
    #[serde(rename = "R")]
    radius: f64,
    periods: usize,
    period: f64,
    closure_gap: f64,
    winding_theta: f64,
    rotation_index: Option<i64>,
    max_frame_drift: f64,
    columns: [&'static str; 6],
    points: Vec<Vec<f64>>,
}

fn run_trace(config: &RunConfig) -> Result<Artifact> {
    let a: args::TraceArgs = config.params()?;
    let q = required("q", a.q)?;
    let radius = positive("R", a.radius.unwrap_or(1.0))?;
    let c1 = finite("C1", a.c1.unwrap_or(0.0))?;
    let samples = a.samples_per_period.unwrap_or(DEFAULT_SAMPLES_PER_PERIOD);
    let trace = match a.c2 {
        Some(c2) => trace_params(&CurveParams::new(radius, c1, finite("C2", c2)?)?, q, samples)?,
        None => closed_trace(required("p", a.p)?, q, c1, radius, samples)?.1,
    };
    let format = a.out.unwrap_or_else(|| config.format_or(OutputFormat::Csv));
    let contents = match format {
        OutputFormat::Csv => trace_table(&trace).to_csv(),
        OutputFormat::Svg => render_svg(&trace, &View::default())?,
        OutputFormat::Json => to_json(&TraceJson {
            c1,
            c2: trace.params.c2,
            radius,
            periods: trace.periods,
            period: trace.period_t,
            closure_gap: trace.closure_gap,
            winding_theta: trace.winding_theta,
            rotation_index: trace.rotation_index,
            max_frame_drift: trace.max_frame_drift,
            columns: TRACE_COLUMNS,
            points: trace_table(&trace).rows,
        })?,
        OutputFormat::Text => return Err(unsupported(config.command, format)),
    };
    Ok(Artifact { format, contents })
}

#[derive(Debug, Clone, Serialize)]
struct ModesReport {
    value: f64,
    stable: bool,
    /// The same second variation integrated numerically on a sampled circle.
    quadrature: f64,
}

#[derive(Debug, Clone, Serialize)]
struct WindowReport {
    value: f64,
    stable: bool,
    z: f64,
    /// Mode attaining the smallest Q(m, z), m ≤ 50.
    critical_mode: u32,
}

/// Samples of the critical circle used for the numerical second variation.
const CIRCLE_SAMPLES: usize = 4096;

fn run_stability(config: &RunConfig) -> Result<Artifact> {
    let a: args::StabilityArgs = config.params()?;
    let format = config.format_or(OutputFormat::Json);
    match (a.modes.as_deref(), a.z) {
        (Some(modes), None) => {
            let radius = positive("R", a.radius.unwrap_or(1.0))?;
            let coeffs = modes
                .split(',')
                .map(|c| c.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Domain(format!("--modes: {e}")))?;
            let pert = FourierPerturbation::from_coefficients(&coeffs)?;
            let value = circle_second_variation(radius, &pert);
            let circle = critical_circle(radius, CIRCLE_SAMPLES)?;
            let quadrature = second_variation_quadrature(&circle, &pert.sample_on(&circle))?;
            json_artifact(&ModesReport { value, stable: value <= 0.0, quadrature }, format, config.command)
        }
        (None, Some(z)) => {
            let z = positive("z", z)?;
            let (critical_mode, value) = (1..=SCANNED_MODES)
                .map(|m| (m, area_preserving_q(m, z)))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .expect("at least one mode");
            let report = WindowReport { value, stable: is_area_stable(z), z, critical_mode };
            json_artifact(&report, format, config.command)
        }
        _ => Err(Error::Domain("give exactly one of --modes and --z".into())),
    }
}

fn classify_text(rows: &[ClassEntry]) -> String {
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|e| {
            let mults: Vec<String> = e.multiplicities.iter().map(|m| m.to_string()).collect();
            let ks: Vec<String> = e.curvatures.iter().map(|k| format!("{k:+.10}")).collect();
            [
                e.g.to_string(),
                e.n.to_string(),
                mults.join(","),
                ks.join(" "),
                format!("{:.1e}", e.residual),
                format!("{:?}", e.status).to_lowercase(),
                e.notes.join("; "),
            ]
        })
        .collect();
    let header = ["g", "n", "multiplicities", "curvatures", "residual", "status", "notes"];
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |row: Vec<&str>| {
        let padded: Vec<String> =
            row.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for row in &cells {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn run_classify(config: &RunConfig) -> Result<Artifact> {
    let a: args::ClassifyArgs = config.params()?;
    let rows = classify_all(a.n_max.unwrap_or(24))?;
    let format = config.format_or(OutputFormat::Json);
    match format {
        OutputFormat::Json => Ok(Artifact { format, contents: to_json(&rows)? }),
        OutputFormat::Text => Ok(Artifact { format, contents: classify_text(&rows) }),
        other => Err(unsupported(config.command, other)),
    }
}

fn run_series_compare(config: &RunConfig) -> Result<Artifact> {
    let a: args::SeriesCompareArgs = config.params()?;
    let c2s = linspace(a.c2_min.unwrap_or(5.0), a.c2_max.unwrap_or(20.0), a.points.unwrap_or(61))?;
    let rows = par::map(&c2s, |&c2| -> Result<Vec<f64>> {
        let params = CurveParams::new(1.0, 0.0, c2)?;
        Ok(vec![
            c2,
            angle_quadrature(&params)?.lambda_theta,
            angle_elliptic(&params)?.lambda_theta,
            angle_series_truncated(&params, 4)?.lambda_theta,
            angle_series_large_c2(&params)?.lambda_theta,
        ])
    });
    let mut table = Table::new(&["C2", "quad", "elliptic", "series4", "asymptotic"]);
    for row in rows {
        table.push(row?);
    }
    table_artifact(&table, config.format_or(OutputFormat::Csv), config.command)
}

#[derive(Debug, Clone, Serialize)]
struct IsoperimetricReport {
    psi: f64,
    lhs: f64,
    rhs: f64,
    relative_difference: f64,
}

fn run_isoperimetric(config: &RunConfig) -> Result<Artifact> {
    let a: args::IsoperimetricArgs = config.params()?;
    if let Some(psi) = a.psi {
        let (lhs, rhs) = isoperimetric_check(psi)?;
        let report = IsoperimetricReport { psi, lhs, rhs, relative_difference: (lhs - rhs) / rhs };
        return json_artifact(&report, config.format_or(OutputFormat::Json), config.command);
    }
    let n = a.points.unwrap_or(100);
    if n == 0 {
        return Err(Error::Domain("points must be positive".into()));
    }
    let mut table = Table::new(&["psi", "lhs", "rhs"]);
    for i in 0..n {
        let psi = FRAC_PI_2 * (i as f64 + 0.5) / n as f64;
        let (lhs, rhs) = isoperimetric_check(psi)?;
        table.push(vec![psi, lhs, rhs]);
    }
    table_artifact(&table, config.format_or(OutputFormat::Csv), config.command)
}

/// Runs the configured command and returns its output without writing it.
pub fn execute(config: &RunConfig) -> Result<Artifact> {
    log::debug!("running {:?} with {:?}", config.command, config.parameters);
    match config.command {
        Command::Domain => run_domain(config),
        Command::Angle => run_angle(config),
        Command::Sweep => run_sweep(config),
        Command::Closure => run_closure(config),
        Command::Trace => run_trace(config),
        Command::Stability => run_stability(config),
        Command::Classify => run_classify(config),
        Command::SeriesCompare => run_series_compare(config),
        Command::Isoperimetric => run_isoperimetric(config),
    }
}

fn deliver(config: &RunConfig, artifact: &Artifact) -> Result<()> {
    match &config.output_path {
        Some(path) => write_atomic(path, artifact.contents.as_bytes()),
        None => {
            let mut out = std::io::stdout().lock();
            match out.write_all(artifact.contents.as_bytes()).and_then(|()| out.flush()) {
                // A closed pipe means the reader has seen enough.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                other => Ok(other?),
            }
        }
    }
}

/// Exit status for an error: 2 for domain and precondition failures, 3 for
/// numerical and I/O failures.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_domain() {
        2
    } else {
        3
    }
}

/// Executes and writes the result, returning the process exit status. Errors
/// are reported as one line on stderr.
pub fn run(config: &RunConfig) -> i32 {
    match execute(config).and_then(|a| deliver(config, &a)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("eca: {e}");
            exit_code(&e)
        }
    }
}

/// [`run`] for parsed command-line arguments.
pub fn run_cli(cli: &Cli) -> i32 {
    match RunConfig::from_cli(cli) {
        Ok(config) => run(&config),
        Err(e) => {
            eprintln!("eca: {e}");
            exit_code(&e)
        }
    }
}
