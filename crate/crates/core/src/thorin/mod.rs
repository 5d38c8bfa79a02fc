//! The exponential Stieltjes representation
//!
//! ```text
//! G_α(z) = a e^{-δz} L_α(z),   L_α(z) = exp ∫₀^∞ [1/(z+t) - 1/(1+t)] θ(t) dt,
//! ```
//!
//! built from a sampled angle function `θ`, and the equivalent form
//! `G_α(z) = c e^{-δz} z^{-1/2} exp(-∫ log(1 + t/z) θ'(t) dt)`.

use std::f64::consts::PI;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galpha::{constants, GAlpha, Method, SlitPoint};
use crate::numerics::{central_derivative, integrate_interval, log_grid, QuadConfig};

pub const DEFAULT_T_MIN: f64 = 1e-4;
pub const DEFAULT_T_MAX: f64 = 1e4;
pub const DEFAULT_NODES: usize = 2000;

/// Smallest accepted table.
pub const MIN_NODES: usize = 16;

/// Largest tolerated `|θ(t_max) - 1/2|`.
pub const UPPER_ENDPOINT_TOL: f64 = 1e-3;

/// `|θ(t_min) - α|` may not exceed this multiple of `t_min^{1-α}`.
pub const LOWER_ENDPOINT_BUDGET: f64 = 5.0;

/// Sampled angle function. Below the first node `θ ≡ α`, above the last
/// `θ ≡ 1/2`; in between it is piecewise linear in `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThetaTable {
    pub alpha: f64,
    pub t: Vec<f64>,
    pub theta: Vec<f64>,
}

impl ThetaTable {
    /// Wrap precomputed samples, checking the table invariants.
    pub fn from_samples(alpha: f64, t: Vec<f64>, theta: Vec<f64>) -> Result<Self> {
        if t.len() < MIN_NODES {
            return Err(Error::GridTooSmall {
                needed: MIN_NODES,
                got: t.len(),
            });
        }
        if theta.len() != t.len() {
            return Err(Error::BadRange(format!("{} nodes but {} values", t.len(), theta.len())));
        }
        if t[0] <= 0.0 || t.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::BadRange("nodes must be positive and strictly increasing".into()));
        }
        if let Some(i) = theta.iter().position(|v| !(*v > 0.0 && *v < 1.0)) {
            return Err(Error::Domain(format!("theta({}) = {} is outside (0, 1)", t[i], theta[i])));
        }
        let last = theta[theta.len() - 1];
        if (last - 0.5).abs() > UPPER_ENDPOINT_TOL {
            return Err(Error::EndpointMismatch(format!(
                "theta({}) = {last} is not within {UPPER_ENDPOINT_TOL} of 1/2; raise t_max",
                t[t.len() - 1]
            )));
        }
        let budget = LOWER_ENDPOINT_BUDGET * t[0].powf(1.0 - alpha);
        if (theta[0] - alpha).abs() > budget {
            return Err(Error::EndpointMismatch(format!(
                "theta({}) = {} is further than {budget:e} from alpha; lower t_min",
                t[0], theta[0]
            )));
        }
        Ok(ThetaTable { alpha, t, theta })
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn t_min(&self) -> f64 {
        self.t[0]
    }

    pub fn t_max(&self) -> f64 {
        self.t[self.t.len() - 1]
    }

    /// `θ(t)` with the table's interpolation and extension rules.
    pub fn theta(&self, t: f64) -> f64 {
        let n = self.t.len();
        if t <= self.t[0] {
            return if t < self.t[0] { self.alpha } else { self.theta[0] };
        }
        if t >= self.t[n - 1] {
            return if t > self.t[n - 1] { 0.5 } else { self.theta[n - 1] };
        }
        let i = self.t.partition_point(|&s| s <= t) - 1;
        let (t0, t1) = (self.t[i], self.t[i + 1]);
        let w = (t - t0) / (t1 - t0);
        self.theta[i] * (1.0 - w) + self.theta[i + 1] * w
    }

    /// CSV with header `t,theta` and 17 significant digits.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Domain(format!("csv write failed: {e}"));
        w.write_record(["t", "theta"]).map_err(io)?;
        for (t, th) in self.t.iter().zip(&self.theta) {
            w.write_record([format!("{t:.16e}"), format!("{th:.16e}")]).map_err(io)?;
        }
        w.flush().map_err(|e| Error::Domain(format!("csv write failed: {e}")))?;
        Ok(())
    }

    pub fn read_csv<R: std::io::Read>(alpha: f64, input: R) -> Result<Self> {
        let mut rd = csv::Reader::from_reader(input);
        let (mut t, mut theta) = (Vec::new(), Vec::new());
        for rec in rd.records() {
            let rec = rec.map_err(|e| Error::Domain(format!("csv read failed: {e}")))?;
            let parse = |i: usize| -> Result<f64> {
                rec.get(i)
                    .and_then(|s| s.trim().parse().ok())
                    .ok_or_else(|| Error::Domain(format!("bad csv row {rec:?}")))
            };
            t.push(parse(0)?);
            theta.push(parse(1)?);
        }
        Self::from_samples(alpha, t, theta)
    }

    pub fn sidecar(&self) -> Result<ThetaSidecar> {
        Ok(ThetaSidecar {
            alpha: self.alpha,
            t_min: self.t_min(),
            t_max: self.t_max(),
            n: self.len(),
            delta: constants(self.alpha).delta,
            a: calibrate_a(self.alpha, self)?,
        })
    }

    /// Write `<stem>.csv` and `<stem>.json`.
    pub fn save(&self, stem: &Path) -> Result<()> {
        let io = |e: std::io::Error| Error::Domain(format!("cannot write {}: {e}", stem.display()));
        let csv_file = std::fs::File::create(stem.with_extension("csv")).map_err(io)?;
        self.write_csv(csv_file)?;
        let json = serde_json::to_string_pretty(&self.sidecar()?)
            .map_err(|e| Error::Domain(format!("json encode failed: {e}")))?;
        std::fs::write(stem.with_extension("json"), json + "\n").map_err(io)?;
        Ok(())
    }
}

/// JSON metadata written next to a table's CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThetaSidecar {
    pub alpha: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub n: usize,
    pub delta: f64,
    pub a: f64,
}

/// Sample `θ` on a log grid.
pub fn build_theta(alpha: f64, t_min: f64, t_max: f64, n: usize) -> Result<ThetaTable> {
    if n < MIN_NODES {
        return Err(Error::GridTooSmall { needed: MIN_NODES, got: n });
    }
    let g = GAlpha::new(alpha)?;
    let t = log_grid(t_min, t_max, n)?;
    let theta = t
        .par_iter()
        .map(|&r| g.theta_at(r).map(|p| p.theta))
        .collect::<Result<Vec<f64>>>()?;
    ThetaTable::from_samples(alpha, t, theta)
}

/// The table with the default grid.
pub fn default_table(alpha: f64) -> Result<ThetaTable> {
    build_theta(alpha, DEFAULT_T_MIN, DEFAULT_T_MAX, DEFAULT_NODES)
}

// ln(1 + w) without losing small |w|
fn ln_1p(w: Complex64) -> Complex64 {
    let re = 0.5 * (w.re * (2.0 + w.re) + w.im * w.im).ln_1p();
    Complex64::new(re, w.im.atan2(1.0 + w.re))
}

/// `∫₀^∞ [1/(z+t) - 1/(1+t)] θ(t) dt`.
pub fn l_exponent(table: &ThetaTable, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let n = table.len();
    let (t0, tn) = (table.t[0], table.t[n - 1]);

    // θ ≡ α on (0, t₀): α [log((z+t₀)/z) - log(1+t₀)]
    let mut sum = table.alpha * (ln_1p(t0 / z) - ln_1p(t0 / one));
    for i in 0..n - 1 {
        let (s0, s1) = (table.t[i], table.t[i + 1]);
        let (th0, th1) = (table.theta[i], table.theta[i + 1]);
        let b = (th1 - th0) / (s1 - s0);
        let a = th0 - b * s0;
        // θ = a + bt: ∫ θ/(z+t) = b Δt + (a - bz) log((z+s₁)/(z+s₀))
        let lz = ln_1p((s1 - s0) / (z + s0));
        let l1 = ln_1p((s1 - s0) / (one + s0));
        sum += (a - b * z) * lz - (a - b * one) * l1;
    }
    // θ ≡ 1/2 on (t_N, ∞): -(1/2) log((z+t_N)/(1+t_N))
    sum - 0.5 * (ln_1p((z - one) / (one + tn)))
}

/// `L_α(z) = exp ∫₀^∞ [1/(z+t) - 1/(1+t)] θ(t) dt`.
pub fn l_eval(table: &ThetaTable, p: SlitPoint) -> Complex64 {
    l_exponent(table, p.z()).exp()
}

/// `a = e^δ G_α(1)`, which makes the representation exact at `z = 1`.
pub fn calibrate_a(alpha: f64, table: &ThetaTable) -> Result<f64> {
    if table.alpha != alpha {
        return Err(Error::Domain(format!(
            "table was built for alpha = {}, not {alpha}",
            table.alpha
        )));
    }
    let g = GAlpha::new(alpha)?;
    let g1 = g.eval(SlitPoint::positive(1.0)?, Method::Auto)?.value;
    Ok((constants(alpha).delta + g1.log_mod).exp())
}

/// `a e^{-δz} L_α(z)`.
pub fn reconstruct(alpha: f64, table: &ThetaTable, p: SlitPoint) -> Result<Complex64> {
    let a = calibrate_a(alpha, table)?;
    Ok(reconstruct_with(a, table, p))
}

/// [`reconstruct`] with an already calibrated `a`.
pub fn reconstruct_with(a: f64, table: &ThetaTable, p: SlitPoint) -> Complex64 {
    let delta = constants(table.alpha).delta;
    let z = p.z();
    (l_exponent(table, z) - delta * z).exp() * a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Increasing,
    Decreasing,
    Constant,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub verdict: Verdict,
    /// Largest step against the verdict's direction (for `Neither`, the
    /// smaller of the largest rise and largest fall).
    pub worst_margin: f64,
    /// Node where that step starts.
    pub at: f64,
    pub tol: f64,
}

/// Classify the table from consecutive differences, with tolerance
/// `1e-9 · max|θ|`.
pub fn monotonicity(table: &ThetaTable) -> MonotonicityReport {
    let scale = table.theta.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let tol = 1e-9 * scale;
    let (mut rise, mut rise_at) = (0.0f64, table.t[0]);
    let (mut fall, mut fall_at) = (0.0f64, table.t[0]);
    for i in 0..table.len() - 1 {
        let d = table.theta[i + 1] - table.theta[i];
        if d > rise {
            rise = d;
            rise_at = table.t[i];
        }
        if -d > fall {
            fall = -d;
            fall_at = table.t[i];
        }
    }
    let (verdict, worst_margin, at) = match (rise > tol, fall > tol) {
        (false, false) => (Verdict::Constant, rise.max(fall), if rise >= fall { rise_at } else { fall_at }),
        (true, false) => (Verdict::Increasing, fall, fall_at),
        (false, true) => (Verdict::Decreasing, rise, rise_at),
        (true, true) => {
            if rise < fall {
                (Verdict::Neither, rise, rise_at)
            } else {
                (Verdict::Neither, fall, fall_at)
            }
        }
    };
    MonotonicityReport {
        verdict,
        worst_margin,
        at,
        tol,
    }
}

/// The measure `θ'(t) dt`, split into the part sampled on the table, a
/// power-law piece below `t_min` and an atom at `t_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaPrime {
    pub alpha: f64,
    pub t: Vec<f64>,
    /// `dθ / d log t` at the nodes.
    pub log_slope: Vec<f64>,
    /// Mass `θ(t_min) - α` spread as `θ - α ∝ t^{1-α}` on `(0, t_min)`.
    pub lower_mass: f64,
    /// Mass `1/2 - θ(t_max)` placed at `t_max`.
    pub upper_mass: f64,
}

impl ThetaPrime {
    pub fn new(table: &ThetaTable) -> Result<Self> {
        let logs: Vec<f64> = table.t.iter().map(|t| t.ln()).collect();
        let log_slope = central_derivative(&logs, &table.theta)?;
        Ok(ThetaPrime {
            alpha: table.alpha,
            t: table.t.clone(),
            log_slope,
            lower_mass: table.theta[0] - table.alpha,
            upper_mass: 0.5 - table.theta[table.len() - 1],
        })
    }

    /// `∫ f(t) θ'(t) dt`.
    pub fn integrate<F>(&self, f: F) -> Result<Complex64>
    where
        F: Fn(f64) -> Complex64,
    {
        let n = self.t.len();
        let mut sum = Complex64::new(0.0, 0.0);
        for i in 0..n - 1 {
            let h = self.t[i + 1].ln() - self.t[i].ln();
            sum += (f(self.t[i]) * self.log_slope[i] + f(self.t[i + 1]) * self.log_slope[i + 1]) * (0.5 * h);
        }
        // below t_min: t = t_min s^{1/(1-α)}, θ - α = lower_mass · s
        let t_min = self.t[0];
        let p = 1.0 / (1.0 - self.alpha);
        let cfg = QuadConfig::default().with_rel_tol(1e-12);
        let lower = integrate_interval(|s: f64| f(t_min * s.powf(p)), 0.0, 1.0, &cfg)?;
        sum += lower.value * self.lower_mass;
        sum += f(self.t[n - 1]) * self.upper_mass;
        Ok(sum)
    }

    /// `∫ θ'(t) dt`; should equal `1/2 - α`.
    pub fn total_variation(&self) -> Result<f64> {
        Ok(self.integrate(|_| Complex64::new(1.0, 0.0))?.re)
    }

    /// `exp(-∫ log t θ'(t) dt)`.
    pub fn log_moment(&self) -> Result<f64> {
        Ok((-self.integrate(|t| Complex64::new(t.ln(), 0.0))?.re).exp())
    }
}

/// Value `exp(-∫ log t θ'(t) dt)` is forced to take: matching the `z → 0`
/// law `G_α(z) ~ Γ(α+1) sin(πα)/π z^{-α}` against the `θ'` form with
/// prefactor `c` gives `sin(πα)/π · Γ(α+1)/c`.
pub fn log_moment_target(alpha: f64) -> f64 {
    crate::galpha::small_z_constant(alpha) / constants(alpha).c_adopted
}

/// The printed right-hand side `sin(πα)/π`, which assumes the prefactor
/// `Γ(α+1)`.
pub fn log_moment_printed(alpha: f64) -> f64 {
    crate::numerics::sin_pi(alpha) / PI
}

/// `c e^{-δz} z^{-1/2} exp(-∫ log(1 + t/z) θ'(t) dt)` with `c` the
/// asymptotic prefactor.
///
/// The form needs `θ` increasing; a table that is not (beyond the
/// monotonicity tolerance) is rejected.
pub fn theta_prime_form(alpha: f64, table: &ThetaTable, p: SlitPoint) -> Result<Complex64> {
    let report = monotonicity(table);
    match report.verdict {
        Verdict::Increasing | Verdict::Constant => {}
        _ => {
            return Err(Error::NotMonotone {
                margin: report.worst_margin,
                at: report.at,
            })
        }
    }
    let tp = ThetaPrime::new(table)?;
    theta_prime_form_with(alpha, &tp, p)
}

/// [`theta_prime_form`] with a precomputed `θ'`.
pub fn theta_prime_form_with(alpha: f64, tp: &ThetaPrime, p: SlitPoint) -> Result<Complex64> {
    let k = constants(alpha);
    let z = p.z();
    let integral = tp.integrate(|t| ln_1p(t / z))?;
    Ok((-k.delta * z - 0.5 * z.ln() - integral).exp() * k.c_adopted)
}

#[cfg(test)]
mod tests;
