//! Table building and output formatting behind the `stable-hcm` binary.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::error::Error;
use crate::galpha::{CutPoint, GAlpha, Method, Side, SlitPoint};
use crate::numerics::{lin_grid, log_grid, QuadConfig};
use crate::stable::{density_with, DensityMethod, StableParams};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numerical(_) | CliError::Io(_) => EXIT_NUMERICAL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Usage(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutputSpec {
    pub format: Format,
    /// Significant digits, 6 to 17.
    pub precision: usize,
}

impl OutputSpec {
    pub fn new(format: Format, precision: usize) -> Result<Self, CliError> {
        if !(6..=17).contains(&precision) {
            return Err(CliError::Usage(format!("precision must be in 6..=17, got {precision}")));
        }
        Ok(OutputSpec { format, precision })
    }
}

impl Default for OutputSpec {
    fn default() -> Self {
        OutputSpec {
            format: Format::Csv,
            precision: 17,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

fn rounded(x: f64, precision: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    // shortest form of the value rounded to `precision` digits
    let r: f64 = format!("{:.*e}", precision - 1, x).parse().expect("formatted float parses");
    if r == 0.0 || (1e-5..1e16).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

impl Table {
    pub fn write<W: Write>(&self, spec: &OutputSpec, mut out: W) -> Result<(), CliError> {
        match spec.format {
            Format::Csv => {
                writeln!(out, "{}", self.columns.join(","))?;
                for row in &self.rows {
                    let line: Vec<String> = row
                        .iter()
                        .map(|c| match c {
                            Cell::Num(x) => rounded(*x, spec.precision),
                            Cell::Text(s) => s.clone(),
                        })
                        .collect();
                    writeln!(out, "{}", line.join(","))?;
                }
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .columns
                            .iter()
                            .zip(row)
                            .map(|(k, c)| {
                                let v = match c {
                                    Cell::Num(x) => rounded(*x, spec.precision)
                                        .parse::<f64>()
                                        .ok()
                                        .and_then(serde_json::Number::from_f64)
                                        .map_or(Value::Null, Value::Number),
                                    Cell::Text(s) => Value::String(s.clone()),
                                };
                                (k.to_string(), v)
                            })
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                let mut top = Map::new();
                top.insert("rows".into(), Value::Array(rows));
                serde_json::to_writer(&mut out, &Value::Object(top)).map_err(std::io::Error::from)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }
}

/// `a:b:n`, `n` points from `a` to `b` inclusive; log-spaced when `log`.
pub fn parse_grid(spec: &str, log: bool) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Usage(format!("grid must look like a:b:n, got `{spec}`"));
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let a: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let b: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
    let grid = if log { log_grid(a, b, n) } else { lin_grid(a, b, n) };
    grid.map_err(|e| CliError::Usage(e.to_string()))
}

pub fn parse_density_method(s: &str) -> Result<DensityMethod, CliError> {
    Ok(match s {
        "auto" => DensityMethod::Auto,
        "integral" => DensityMethod::Integral,
        "series" => DensityMethod::Series,
        "closed-form-levy" | "closed_form_levy" => DensityMethod::ClosedFormLevy,
        "kanter" => DensityMethod::Kanter,
        _ => return Err(CliError::Usage(format!("unknown density method `{s}`"))),
    })
}

pub fn parse_method(s: &str) -> Result<Method, CliError> {
    Ok(match s {
        "auto" => Method::Auto,
        "series" => Method::Series,
        "integral" => Method::Integral,
        "ray" => Method::Ray,
        "descent" => Method::Descent,
        "asymptotic" => Method::Asymptotic,
        _ => return Err(CliError::Usage(format!("unknown method `{s}`"))),
    })
}

pub fn method_name(m: Method) -> &'static str {
    match m {
        Method::Series => "series",
        Method::Integral => "integral",
        Method::Ray => "ray",
        Method::Descent => "descent",
        Method::Asymptotic => "asymptotic",
        Method::Auto => "auto",
    }
}

pub fn parse_side(s: &str) -> Result<Side, CliError> {
    match s {
        "upper" => Ok(Side::Upper),
        "lower" => Ok(Side::Lower),
        _ => Err(CliError::Usage(format!("cut side must be upper or lower, got `{s}`"))),
    }
}

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

/// Rows `(x, g)`. Inputs are validated before any evaluation; evaluation
/// errors name the failing `x`.
pub fn density_table(
    alpha: f64,
    rho: f64,
    xs: &[f64],
    method: DensityMethod,
    cfg: &QuadConfig,
) -> Result<Table, CliError> {
    let params = StableParams::new(alpha, rho).map_err(usage)?;
    if let Some(x) = xs.iter().find(|x| !(**x > 0.0 && x.is_finite())) {
        return Err(CliError::Usage(format!("x must be positive, got {x}")));
    }
    let values = xs
        .par_iter()
        .map(|&x| {
            density_with(params, x, method, cfg).map_err(|e| match e {
                Error::Domain(_) => usage(e),
                _ => CliError::Numerical(format!("at x = {x}: {e}")),
            })
        })
        .collect::<Result<Vec<f64>, CliError>>()?;
    Ok(Table {
        columns: vec!["x", "g"],
        rows: xs.iter().zip(values).map(|(&x, g)| vec![x.into(), g.into()]).collect(),
    })
}

/// Where `G_α` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    Slit(SlitPoint),
    Cut(CutPoint),
}

impl Point {
    /// `t` must lie strictly inside `(-1, 1)` unless `cut` is given.
    pub fn parse(r: f64, t: Option<f64>, cut: Option<Side>) -> Result<Point, CliError> {
        match (t, cut) {
            (Some(_), Some(_)) => Err(CliError::Usage("--t and --cut are exclusive".into())),
            (_, Some(side)) => Ok(Point::Cut(CutPoint::new(r, side).map_err(usage)?)),
            (t, None) => {
                let t = t.unwrap_or(0.0);
                if t.abs() >= 1.0 {
                    return Err(CliError::Usage(format!("|t| = {} is on the cut; use --cut upper|lower", t.abs())));
                }
                Ok(Point::Slit(SlitPoint::new(r, t).map_err(usage)?))
            }
        }
    }

    fn r(&self) -> f64 {
        match self {
            Point::Slit(p) => p.r,
            Point::Cut(q) => q.r,
        }
    }

    fn t(&self) -> f64 {
        match self {
            Point::Slit(p) => p.t,
            Point::Cut(CutPoint { side: Side::Upper, .. }) => 1.0,
            Point::Cut(CutPoint { side: Side::Lower, .. }) => -1.0,
        }
    }
}

/// Rows `(r, t, re, im, log_mod, phase_over_pi, method_used)`; `re`, `im`
/// are infinite when the modulus overflows.
pub fn galpha_table(alpha: f64, points: &[Point], method: Method, cfg: &QuadConfig) -> Result<Table, CliError> {
    let g = GAlpha::with_config(alpha, *cfg).map_err(usage)?;
    let values = points
        .par_iter()
        .map(|p| {
            let v = match p {
                Point::Slit(s) => g.eval(*s, method),
                Point::Cut(q) => g.boundary(*q, method),
            };
            v.map_err(|e| match e {
                Error::Domain(_) => usage(e),
                _ => CliError::Numerical(format!("at r = {}, t = {}: {e}", p.r(), p.t())),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let rows = points
        .iter()
        .zip(values)
        .map(|(p, v)| {
            let m = v.value.log_mod.exp();
            let ang = std::f64::consts::PI * v.value.phase_over_pi;
            let (re, im) = if v.value.is_zero() { (0.0, 0.0) } else { (m * ang.cos(), m * ang.sin()) };
            vec![
                p.r().into(),
                p.t().into(),
                re.into(),
                im.into(),
                v.value.log_mod.into(),
                v.value.phase_over_pi.into(),
                method_name(v.method).into(),
            ]
        })
        .collect();
    Ok(Table {
        columns: vec!["r", "t", "re", "im", "log_mod", "phase_over_pi", "method_used"],
        rows,
    })
}

/// Pass/fail summary line for a verification report.
pub struct Summary<'a>(pub &'a crate::verify::Report);

impl fmt::Display for Summary<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.checks.len();
        let failed = self.0.failures().count();
        write!(f, "{}: {} of {n} checks passed", self.0.suite, n - failed)?;
        for c in self.0.failures() {
            write!(f, "\n  FAIL {} (alpha {:?}): measured {} expected {}", c.name, c.alpha, c.measured, c.expected)?;
        }
        Ok(())
    }
}
