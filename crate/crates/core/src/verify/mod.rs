//! Verification suites: each runs a family of numerical checks and reports
//! the measured value next to the expected one.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::galpha::{small_z_constant, small_z_constant_printed, CutPoint, GAlpha, Method, SlitPoint};
use crate::hcm::{
    eval_representation, hcm_check_default, semigroup_membership, transform_invert, transform_power,
    transform_product, transform_scalepow, Atom, CMReport, HCMRepresentation,
};
use crate::numerics::{integrate_half_line_real, log_grid, QuadConfig};
use crate::stable::{
    density, density_with, mult_convolution, pushforward_power, subordination_mixture, subordination_scale,
    DensityMethod, StableParams,
};
use crate::thorin::{
    calibrate_a, default_table, log_moment_printed, log_moment_target, monotonicity, reconstruct_with,
    ThetaPrime, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Asymptotics,
    SmallZ,
    CutLaws,
    Representation,
    ThetaMonotone,
    Hcm,
    Subordination,
    Semigroup,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Asymptotics,
        Suite::SmallZ,
        Suite::CutLaws,
        Suite::Representation,
        Suite::ThetaMonotone,
        Suite::Hcm,
        Suite::Subordination,
        Suite::Semigroup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Asymptotics => "asymptotics",
            Suite::SmallZ => "small-z",
            Suite::CutLaws => "cut-laws",
            Suite::Representation => "representation",
            Suite::ThetaMonotone => "theta-monotone",
            Suite::Hcm => "hcm",
            Suite::Subordination => "subordination",
            Suite::Semigroup => "semigroup",
            Suite::All => "all",
        }
    }

    /// α values used when none are given.
    pub fn default_alphas(self) -> Vec<f64> {
        match self {
            Suite::Asymptotics => vec![0.35, 0.4, 0.45, 0.5],
            Suite::SmallZ => vec![0.35, 0.4, 0.45],
            Suite::CutLaws => vec![1.0 / 3.0, 0.35, 0.4, 0.45],
            Suite::Representation => vec![1.0 / 3.0, 0.4, 0.5, 0.6],
            Suite::ThetaMonotone => vec![1.0 / 3.0, 0.4, 0.45, 0.5, 0.6, 0.7],
            Suite::Hcm => vec![1.0 / 3.0, 0.4, 0.45, 0.5, 0.6, 0.7],
            Suite::Subordination | Suite::Semigroup | Suite::All => Vec::new(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain(&[Suite::All])
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Domain(format!("unknown suite `{s}`")))
    }
}

/// A measured or expected quantity.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Measure {
    Number(f64),
    Label(String),
}

impl From<f64> for Measure {
    fn from(x: f64) -> Self {
        Measure::Number(x)
    }
}

impl From<&str> for Measure {
    fn from(s: &str) -> Self {
        Measure::Label(s.to_string())
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Number(x) => write!(f, "{x:.6e}"),
            Measure::Label(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub alpha: Option<f64>,
    pub measured: Measure,
    pub expected: Measure,
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Check {
    fn new(
        suite: Suite,
        name: impl Into<String>,
        alpha: Option<f64>,
        measured: impl Into<Measure>,
        expected: impl Into<Measure>,
        tolerance: Option<f64>,
        pass: bool,
    ) -> Self {
        Check {
            suite: suite.name(),
            name: name.into(),
            alpha,
            measured: measured.into(),
            expected: expected.into(),
            tolerance,
            pass,
        }
    }

    /// `|measured/expected - 1| ≤ tol`.
    fn rel(suite: Suite, name: &str, alpha: Option<f64>, measured: f64, expected: f64, tol: f64) -> Self {
        let pass = (measured - expected).abs() <= tol * expected.abs();
        Check::new(suite, name, alpha, measured, expected, Some(tol), pass)
    }

    /// `|measured - expected| ≤ tol`.
    fn abs(suite: Suite, name: &str, alpha: Option<f64>, measured: f64, expected: f64, tol: f64) -> Self {
        let pass = (measured - expected).abs() <= tol;
        Check::new(suite, name, alpha, measured, expected, Some(tol), pass)
    }

    /// `measured ≤ bound`, reported against an expected value of 0.
    fn below(suite: Suite, name: &str, alpha: Option<f64>, measured: f64, bound: f64) -> Self {
        Check::new(suite, name, alpha, measured, 0.0, Some(bound), measured <= bound)
    }

    /// Passes when `measured` is NOT within `tol` relative of `candidate`.
    fn refutes(suite: Suite, name: &str, alpha: Option<f64>, measured: f64, candidate: f64, tol: f64) -> Self {
        let pass = (measured - candidate).abs() > tol * candidate.abs();
        Check::new(suite, name, alpha, measured, candidate, Some(tol), pass)
    }

    fn cm(suite: Suite, name: &str, alpha: Option<f64>, report: &CMReport, consistent: bool) -> Self {
        let expected = if consistent { "consistent" } else { "violated" };
        Check::new(
            suite,
            name,
            alpha,
            report.max_violation,
            expected,
            Some(report.tol),
            report.is_consistent() == consistent,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        Report {
            suite: suite.name().to_string(),
            pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyOptions {
    /// Overrides each suite's default α list.
    pub alphas: Option<Vec<f64>>,
    /// Seed for randomized representations.
    pub seed: u64,
    pub quad: QuadConfig,
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Report> {
    if suite == Suite::All {
        let mut checks = Vec::new();
        for s in Suite::EACH {
            checks.extend(run(s, opts)?.checks);
        }
        return Ok(Report::new(Suite::All, checks));
    }
    let alphas = opts.alphas.clone().unwrap_or_else(|| suite.default_alphas());
    for &a in &alphas {
        if !(a > 0.0 && a < 1.0) {
            return Err(Error::Domain(format!("alpha must lie in (0, 1), got {a}")));
        }
    }
    let checks = match suite {
        Suite::Asymptotics => asymptotics(&alphas, opts)?,
        Suite::SmallZ => small_z(&alphas, opts)?,
        Suite::CutLaws => cut_laws(&alphas, opts)?,
        Suite::Representation => representation(&alphas)?,
        Suite::ThetaMonotone => theta_monotone(&alphas)?,
        Suite::Hcm => hcm(&alphas, opts)?,
        Suite::Subordination => subordination(opts)?,
        Suite::Semigroup => semigroup(),
        Suite::All => unreachable!(),
    };
    Ok(Report::new(suite, checks))
}

fn is_half(a: f64) -> bool {
    (a - 0.5).abs() < 1e-12
}

fn half_closed_form(x: f64) -> f64 {
    (-x / 4.0).exp() / (2.0 * PI.sqrt() * x.sqrt())
}

fn exact_half(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::Asymptotics;
    let g = GAlpha::with_config(0.5, opts.quad)?;
    let xs = log_grid(0.01, 100.0, 50)?;
    let mut out = Vec::new();
    for (name, method) in [("closed_form_series", Method::Series), ("closed_form_integral", Method::Integral)] {
        let mut worst = 0.0f64;
        for &x in &xs {
            let v = g.eval(SlitPoint::positive(x)?, method)?.to_complex()?.re;
            let e = half_closed_form(x);
            worst = worst.max((v - e).abs() / e);
        }
        out.push(Check::below(s, name, Some(0.5), worst, 1e-9));
    }
    let mut worst = 0.0f64;
    for r in log_grid(1e-3, 50.0, 200)? {
        worst = worst.max((g.theta_at(r)?.theta - 0.5).abs());
    }
    out.push(Check::below(s, "theta_flat_on_cut", Some(0.5), worst, 1e-10));
    Ok(out)
}

fn asymptotics(alphas: &[f64], opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::Asymptotics;
    let mut out = Vec::new();
    if alphas.iter().any(|&a| is_half(a)) {
        out.extend(exact_half(opts)?);
    }
    for &a in alphas {
        let g = GAlpha::with_config(a, opts.quad)?;
        let k = g.constants();
        let mut positive = Vec::new();
        let mut cut = Vec::new();
        for x in [100.0f64, 200.0] {
            let v = g.eval(SlitPoint::positive(x)?, Method::Descent)?.value;
            positive.push((v.log_mod + 0.5 * x.ln() + k.delta * x).exp());
            let b = g.boundary(CutPoint::upper(x)?, Method::Ray)?.value;
            cut.push((b.log_mod + 0.5 * x.ln() - k.delta * x).exp());
        }
        for (side, m) in [("positive", &positive), ("cut", &cut)] {
            out.push(Check::rel(s, &format!("{side}_limit_x100"), Some(a), m[0], k.c_adopted, 0.02));
            out.push(Check::rel(s, &format!("{side}_limit_x200"), Some(a), m[1], k.c_adopted, 0.02));
            out.push(Check::below(s, &format!("{side}_drift"), Some(a), (m[1] / m[0] - 1.0).abs(), 0.02));
        }
    }
    Ok(out)
}

fn small_z(alphas: &[f64], opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::SmallZ;
    let x = 1e-5f64;
    let mut out = Vec::new();
    for &a in alphas {
        let g = GAlpha::with_config(a, opts.quad)?;
        let m = x.powf(a) * g.positive(x)?;
        out.push(Check::rel(s, "limit_single_angle", Some(a), m, small_z_constant(a), 1e-3));
        out.push(Check::refutes(
            s,
            "refutes_double_angle",
            Some(a),
            m,
            small_z_constant_printed(a),
            0.1,
        ));
    }
    Ok(out)
}

/// Smallest relative step `(v[i+1] - v[i]) / |v[i]|`, sign-adjusted so a
/// positive result means strictly monotone in the requested direction.
fn min_step(v: &[f64], increasing: bool) -> f64 {
    let dir = if increasing { 1.0 } else { -1.0 };
    v.windows(2)
        .map(|w| dir * (w[1] - w[0]) / w[0].abs())
        .fold(f64::INFINITY, f64::min)
}

fn cut_laws(alphas: &[f64], opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::CutLaws;
    let rs = log_grid(1e-3, 50.0, 200)?;
    let mut out = Vec::new();
    for &a in alphas {
        let g = GAlpha::with_config(a, opts.quad)?;
        let mut max_im = f64::NEG_INFINITY;
        let mut scaled_im = Vec::with_capacity(rs.len());
        for &r in &rs {
            let v = g.boundary(CutPoint::upper(r)?, Method::Auto)?.to_complex()?;
            max_im = max_im.max(v.im);
            scaled_im.push(-r.powf(a) * v.im);
        }
        out.push(Check::new(s, "imaginary_part_negative", Some(a), max_im, 0.0, None, max_im < 0.0));
        let step = min_step(&scaled_im, true);
        out.push(Check::new(s, "scaled_imaginary_increasing", Some(a), step, 0.0, None, step > 0.0));

        // the real part is only known to decrease, and ρ = 1/α - 2 to be
        // admissible, for α in [1/3, 1/2]
        if !(1.0 / 3.0 - 1e-12..=0.5).contains(&a) {
            continue;
        }
        let scaled_re = rs
            .iter()
            .map(|&r| Ok(r.powf(a) * g.boundary_re(r)?))
            .collect::<Result<Vec<f64>>>()?;
        let step = min_step(&scaled_re, false);
        out.push(Check::new(s, "scaled_real_decreasing", Some(a), step, 0.0, None, step > 0.0));

        if is_half(a) {
            continue;
        }
        let p = StableParams::new(a, (1.0 / a - 2.0).min(1.0))?;
        let mut literal = 0.0f64;
        let mut halved = 0.0f64;
        for r in [0.5f64, 1.0, 2.0] {
            let re = g.boundary_re(r)?;
            let rhs = r.powf(-1.0 / a) * density_with(p, r.powf(-(1.0 - a) / a), DensityMethod::Auto, &opts.quad)?;
            literal = literal.max((re - rhs).abs() / re.abs());
            halved = halved.max((re - 0.5 * rhs).abs() / re.abs());
        }
        out.push(Check::below(s, "real_part_density_identity", Some(a), literal, 1e-6));
        out.push(Check::below(s, "real_part_half_density_identity", Some(a), halved, 1e-6));
    }
    Ok(out)
}

fn representation(alphas: &[f64]) -> Result<Vec<Check>> {
    let s = Suite::Representation;
    let rs = log_grid(0.1, 20.0, 8)?;
    let mut out = Vec::new();
    for &a in alphas {
        let tab = default_table(a)?;
        let g = GAlpha::new(a)?;
        let amp = calibrate_a(a, &tab)?;
        let mut worst = 0.0f64;
        for &r in &rs {
            for t in [0.0, 0.4, -0.4, 0.9, -0.9] {
                let p = SlitPoint::new(r, t)?;
                let e = g.eval_complex(p, Method::Auto)?;
                worst = worst.max((reconstruct_with(amp, &tab, p) - e).norm() / e.norm());
            }
        }
        out.push(Check::below(s, "reconstruction", Some(a), worst, 1e-3));
    }
    Ok(out)
}

fn theta_monotone(alphas: &[f64]) -> Result<Vec<Check>> {
    let s = Suite::ThetaMonotone;
    let mut out = Vec::new();
    for &a in alphas {
        let tab = default_table(a)?;
        let n = tab.len();
        out.push(Check::abs(s, "theta_at_t_min", Some(a), tab.theta[0], a, 2e-2));
        out.push(Check::abs(s, "theta_at_t_max", Some(a), tab.theta[n - 1], 0.5, 1e-3));
        let expected = if is_half(a) {
            Verdict::Constant
        } else if a < 0.5 {
            Verdict::Increasing
        } else {
            Verdict::Decreasing
        };
        let rep = monotonicity(&tab);
        out.push(Check::new(
            s,
            "monotonicity",
            Some(a),
            verdict_label(rep.verdict),
            verdict_label(expected),
            Some(rep.tol),
            rep.verdict == expected,
        ));
        let tp = ThetaPrime::new(&tab)?;
        out.push(Check::abs(s, "total_variation", Some(a), tp.total_variation()?, 0.5 - a, 1e-3));
        if a <= 0.5 {
            let lm = tp.log_moment()?;
            out.push(Check::rel(s, "log_moment", Some(a), lm, log_moment_target(a), 1e-3));
            out.push(Check::refutes(s, "log_moment_unnormalized", Some(a), lm, log_moment_printed(a), 0.1));
        }
    }
    Ok(out)
}

fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Increasing => "increasing",
        Verdict::Decreasing => "decreasing",
        Verdict::Constant => "constant",
        Verdict::Neither => "neither",
    }
}

/// A random valid representation: `β ∈ [-2, 3]`, `a₁, a₂ ∈ [0, 2]`, up to
/// five atoms in each measure.
pub fn random_representation<R: RngExt>(rng: &mut R) -> HCMRepresentation {
    let atoms = |rng: &mut R| {
        let n = rng.random_range(0..=5);
        (0..n)
            .map(|_| Atom {
                t: rng.random_range(1.0..20.0),
                w: rng.random_range(0.05..2.0),
            })
            .collect::<Vec<_>>()
    };
    let mu1 = atoms(rng);
    let mu2 = atoms(rng);
    HCMRepresentation {
        c: rng.random_range(0.5..2.0),
        beta: rng.random_range(-2.0..3.0),
        a1: rng.random_range(0.0..2.0),
        a2: rng.random_range(0.0..2.0),
        mu1,
        mu2,
    }
}

/// Finite mass on `(0, ∞)`: integrable at both ends.
fn is_integrable(rep: &HCMRepresentation) -> bool {
    let w1: f64 = rep.mu1.iter().map(|a| a.w).sum();
    let w2: f64 = rep.mu2.iter().map(|a| a.w).sum();
    let at_zero = rep.a2 > 0.0 || rep.beta + w2 > 0.1;
    let at_infinity = rep.a1 > 0.05 || rep.beta - w1 < -0.1;
    at_zero && at_infinity
}

fn normalize(rep: &HCMRepresentation, quad: &QuadConfig) -> Result<HCMRepresentation> {
    let mass = integrate_half_line_real(|x| eval_representation(rep, x).unwrap_or(0.0), quad)?;
    Ok(HCMRepresentation {
        c: rep.c / mass,
        ..rep.clone()
    })
}

const HCM_REPRESENTATIONS: usize = 50;
const HCM_PRODUCTS: usize = 5;

fn hcm(alphas: &[f64], opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::Hcm;
    let mut out = Vec::new();

    let gamma = |x: f64| Ok(x.powf(1.5) * (-x).exp());
    out.push(Check::cm(s, "gamma_kernel", None, &hcm_check_default(gamma)?, true));
    out.push(Check::cm(
        s,
        "gamma_kernel_scaled_power",
        None,
        &hcm_check_default(transform_scalepow(gamma, -3.2)?)?,
        true,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let reps: Vec<HCMRepresentation> = (0..HCM_REPRESENTATIONS).map(|_| random_representation(&mut rng)).collect();
    let mut worst_rep: Option<CMReport> = None;
    let mut worst_closure: Option<CMReport> = None;
    let keep_worst = |slot: &mut Option<CMReport>, r: CMReport| {
        let replace = match slot {
            None => true,
            Some(old) => (r.is_consistent(), -r.max_violation) < (old.is_consistent(), -old.max_violation),
        };
        if replace {
            *slot = Some(r);
        }
    };
    for rep in &reps {
        let h = |x: f64| eval_representation(rep, x);
        keep_worst(&mut worst_rep, hcm_check_default(h)?);
        keep_worst(&mut worst_closure, hcm_check_default(transform_invert(h))?);
        for b in [-1.0, 0.5, 1.0] {
            keep_worst(&mut worst_closure, hcm_check_default(transform_power(h, b)?)?);
        }
        for g in [-2.0, 3.0] {
            keep_worst(&mut worst_closure, hcm_check_default(transform_scalepow(h, g)?)?);
        }
    }
    let densities = reps
        .iter()
        .filter(|r| is_integrable(r))
        .take(2 * HCM_PRODUCTS)
        .map(|r| normalize(r, &opts.quad))
        .collect::<Result<Vec<_>>>()?;
    let mut worst_product: Option<CMReport> = None;
    for pair in densities.chunks_exact(2) {
        let (f, g) = (&pair[0], &pair[1]);
        let p = transform_product(
            |x: f64| eval_representation(f, x),
            |x: f64| eval_representation(g, x),
            opts.quad.with_rel_tol(1e-12),
        );
        keep_worst(&mut worst_product, hcm_check_default(p)?);
    }
    for (name, r) in [
        ("random_representations", worst_rep),
        ("random_representation_closures", worst_closure),
        ("random_density_products", worst_product),
    ] {
        if let Some(r) = r {
            out.push(Check::cm(s, name, None, &r, true));
        }
    }

    for &a in alphas {
        let g = GAlpha::with_config(a, opts.quad)?;
        if a <= 0.5 {
            out.push(Check::cm(s, "g_alpha_positive_axis", Some(a), &hcm_check_default(|x| g.positive(x))?, true));
            let p = StableParams::positive(a)?;
            let d = hcm_check_default(|x| density_with(p, x, DensityMethod::Auto, &opts.quad))?;
            out.push(Check::cm(s, "stable_density", Some(a), &d, true));
        } else {
            let delta = g.constants().delta;
            let r = hcm_check_default(|x: f64| Ok((-delta * x).exp() / g.positive(x)?))?;
            out.push(Check::cm(s, "damped_reciprocal", Some(a), &r, true));
        }
    }

    out.push(Check::cm(
        s,
        "gaussian_control",
        None,
        &hcm_check_default(|x: f64| Ok((-x * x).exp()))?,
        false,
    ));
    out.push(Check::cm(
        s,
        "oscillating_control",
        None,
        &hcm_check_default(|x: f64| Ok((2.0 - x.ln().sin()) * (-x).exp()))?,
        false,
    ));
    Ok(out)
}

fn subordination(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::Subordination;
    let half = StableParams::positive(0.5)?;
    let quarter = StableParams::positive(0.25)?;
    let cfg = opts.quad.with_rel_tol(opts.quad.rel_tol.min(1e-12));
    let f = |y: f64| density(half, y, DensityMethod::Auto);
    let squared = |y: f64| pushforward_power(f, 2.0, y);
    let mut out = Vec::new();
    for x in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let v = mult_convolution(f, squared, x, &cfg)?;
        let e = density(quarter, x, DensityMethod::Auto)?;
        out.push(Check::rel(s, &format!("product_density_x{x}"), Some(0.25), v, e, 1e-6));
    }
    let a = 0.4;
    let target = StableParams::positive(a)?;
    let scale = subordination_scale(a);
    for x in [0.5, 1.0, 2.0] {
        let v = subordination_mixture(2.0 * a, 1.0, x, &cfg)?;
        let e = density(target, x / scale, DensityMethod::Auto)? / scale;
        out.push(Check::rel(s, &format!("mixture_rescaled_x{x}"), Some(a), v, e, 1e-6));
    }
    Ok(out)
}

fn semigroup() -> Vec<Check> {
    let s = Suite::Semigroup;
    let mut alphas: Vec<f64> = (1..1000).map(|k| k as f64 * 1e-3).collect();
    alphas.extend([0.25, 1.0 / 3.0, 0.5]);
    let mut mismatches = 0usize;
    let mut worst_product = 0.0f64;
    let mut factors_in_range = true;
    for &a in &alphas {
        let inside = a <= 0.25 || (1.0 / 3.0..=0.5).contains(&a);
        match semigroup_membership(a) {
            Some(f) => {
                mismatches += usize::from(!inside);
                factors_in_range &= f.iter().all(|x| (1.0 / 3.0 - 1e-12..=0.5 + 1e-12).contains(x));
                worst_product = worst_product.max((f.iter().product::<f64>() - a).abs());
            }
            None => mismatches += usize::from(inside),
        }
    }
    let mut out = vec![
        Check::new(s, "membership_mismatches", None, mismatches as f64, 0.0, None, mismatches == 0),
        Check::below(s, "factor_product_error", None, worst_product, 1e-12),
        Check::new(
            s,
            "factors_in_generator_interval",
            None,
            if factors_in_range { "yes" } else { "no" },
            "yes",
            None,
            factors_in_range,
        ),
    ];
    for (a, member) in [(0.25, true), (0.3, false), (1.0 / 3.0, true), (0.5, true), (0.51, false)] {
        let got = semigroup_membership(a).is_some();
        let label = |b: bool| if b { "member" } else { "outside" };
        out.push(Check::new(s, "boundary_point", Some(a), label(got), label(member), None, got == member));
    }
    out
}
