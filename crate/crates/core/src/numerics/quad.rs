//! Adaptive Gauss–Kronrod quadrature for complex-valued integrands.
//!
//! The core is a global adaptive scheme over 21-point Kronrod panels: the
//! panel with the largest error estimate is bisected until the summed
//! estimate falls under `max(rel_tol·|I|, abs_tol)`. Half-line integrals are
//! rescaled by the peak hint and truncated at a point where the integrand
//! has become negligible.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hard cap on the number of live panels in one adaptive run.
const MAX_PANELS: usize = 40_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_levels: u32,
    pub peak_hint: Option<f64>,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-300,
            max_levels: 50,
            peak_hint: None,
        }
    }
}

impl QuadConfig {
    pub fn new(rel_tol: f64, abs_tol: f64, max_levels: u32, peak_hint: Option<f64>) -> Result<Self> {
        let cfg = QuadConfig {
            rel_tol,
            abs_tol,
            max_levels,
            peak_hint,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Default configuration with `rel_tol` taken from `STABLE_HCM_TOL` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = QuadConfig::default();
        if let Ok(raw) = std::env::var("STABLE_HCM_TOL") {
            cfg.rel_tol = raw
                .trim()
                .parse()
                .map_err(|_| Error::Domain(format!("STABLE_HCM_TOL is not a number: {raw:?}")))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Domain(format!("rel_tol must be > 0, got {}", self.rel_tol)));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::Domain(format!("abs_tol must be >= 0, got {}", self.abs_tol)));
        }
        if self.max_levels < 1 {
            return Err(Error::Domain("max_levels must be >= 1".into()));
        }
        if let Some(p) = self.peak_hint {
            if !(p > 0.0 && p.is_finite()) {
                return Err(Error::Domain(format!("peak_hint must be > 0, got {p}")));
            }
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_peak_hint(mut self, peak: f64) -> Self {
        self.peak_hint = Some(peak);
        self
    }

    pub fn without_peak_hint(mut self) -> Self {
        self.peak_hint = None;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub err_estimate: f64,
    pub evaluations: usize,
}

impl QuadResult {
    pub fn relative_error(&self) -> f64 {
        self.err_estimate / self.value.norm()
    }
}

// 21-point Kronrod extension of the 10-point Gauss rule (abscissae on [0,1]
// of the symmetric rule; the last abscissa is the centre).
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077600525454806,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

// Gauss weights for the odd-indexed Kronrod abscissae.
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
    depth: u32,
    roundoff_limited: bool,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn sample<F>(f: &F, x: f64, evals: &mut usize) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    *evals += 1;
    let v = f(x);
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFiniteSample { at: x })
    }
}

fn kronrod_panel<F>(f: &F, a: f64, b: f64, depth: u32, evals: &mut usize) -> Result<Panel>
where
    F: Fn(f64) -> Complex64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = sample(f, center, evals)?;

    let mut res_k = fc * WGK[10];
    let mut res_g = Complex64::new(0.0, 0.0);
    let mut res_abs = fc.norm() * WGK[10];
    let mut fv1 = [Complex64::new(0.0, 0.0); 10];
    let mut fv2 = [Complex64::new(0.0, 0.0); 10];

    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = sample(f, center - dx, evals)?;
        let f2 = sample(f, center + dx, evals)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += (f1 + f2) * WGK[j];
        res_abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            res_g += (f1 + f2) * WG[j / 2];
        }
    }

    let mean = res_k * 0.5;
    let mut res_asc = WGK[10] * (fc - mean).norm();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }

    let scale = half.abs();
    let value = res_k * half;
    let res_abs = res_abs * scale;
    let res_asc = res_asc * scale;

    let mut err = ((res_k - res_g) * half).norm();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * res_abs;
    let roundoff_limited = floor >= err;
    if roundoff_limited {
        err = floor;
    }

    Ok(Panel {
        a,
        b,
        value,
        err,
        depth,
        roundoff_limited,
    })
}

/// Global adaptive integration starting from the panels delimited by `breaks`.
pub fn integrate_with_breaks<F>(f: F, breaks: &[f64], cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    cfg.validate()?;
    if breaks.len() < 2 || breaks.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::BadRange("quadrature breakpoints must be strictly increasing".into()));
    }

    let mut evals = 0usize;
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Panel> = Vec::new();
    let mut total = Complex64::new(0.0, 0.0);
    let mut total_err = 0.0;

    for w in breaks.windows(2) {
        let p = kronrod_panel(&f, w[0], w[1], 0, &mut evals)?;
        total += p.value;
        total_err += p.err;
        heap.push(p);
    }

    loop {
        let tol = (cfg.rel_tol * total.norm()).max(cfg.abs_tol);
        if total_err <= tol {
            break;
        }
        let Some(worst) = heap.pop() else {
            break;
        };
        let width = worst.b - worst.a;
        let tiny = width <= 1e-14 * worst.a.abs().max(worst.b.abs()).max(f64::MIN_POSITIVE);
        if worst.depth >= cfg.max_levels || worst.roundoff_limited || tiny {
            frozen.push(worst);
            continue;
        }
        if heap.len() + frozen.len() >= MAX_PANELS {
            frozen.push(worst);
            break;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod_panel(&f, worst.a, mid, worst.depth + 1, &mut evals)?;
        let right = kronrod_panel(&f, mid, worst.b, worst.depth + 1, &mut evals)?;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from scratch to drop the drift of the running totals.
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for p in heap.iter().chain(frozen.iter()) {
        value += p.value;
        err += p.err;
    }
    let tol = (cfg.rel_tol * value.norm()).max(cfg.abs_tol);
    if err > tol {
        return Err(Error::NonConvergence {
            value: value.norm(),
            err_estimate: err,
        });
    }
    Ok(QuadResult {
        value,
        err_estimate: err,
        evaluations: evals,
    })
}

/// Integral of `f` over the finite interval `[a, b]`.
pub fn integrate_interval<F>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    if !(b > a) || !a.is_finite() || !b.is_finite() {
        return Err(Error::BadRange(format!("need a < b, got [{a}, {b}]")));
    }
    let breaks: Vec<f64> = (0..=4).map(|k| a + (b - a) * k as f64 / 4.0).collect();
    integrate_with_breaks(f, &breaks, cfg)
}

/// Integral of `f` over `(0, ∞)`.
///
/// With a peak hint `p` the integrand is rescaled as `y = p·u`, so the
/// dominant maximum of a Laplace-type integrand sits near `u = 1`. The upper
/// limit is doubled until the integrand is negligible there.
pub fn integrate_half_line<F>(f: F, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    cfg.validate()?;
    let scale = cfg.peak_hint.unwrap_or(1.0);
    let g = |u: f64| f(scale * u) * scale;

    let mut evals = 0usize;
    let mut magnitude: f64 = 0.0;
    for u in [0.0625, 0.25, 0.5, 1.0, 2.0, 4.0] {
        magnitude = magnitude.max(sample(&g, u, &mut evals)?.norm());
    }
    let tail_tol = cfg.abs_tol.max(1e-3 * cfg.rel_tol * magnitude);

    let mut upper: f64 = 8.0;
    loop {
        let mut edge: f64 = 0.0;
        for s in [1.0, 1.25, 1.5, 2.0] {
            edge = edge.max(sample(&g, s * upper, &mut evals)?.norm());
        }
        if edge * upper <= tail_tol {
            break;
        }
        upper *= 2.0;
        if upper > 1e9 {
            return Err(Error::NonConvergence {
                value: magnitude,
                err_estimate: edge * upper,
            });
        }
    }

    let mut breaks = vec![0.0, 1.0 / 64.0, 1.0 / 16.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0];
    let mut b = 3.0;
    while b < upper {
        breaks.push(b);
        b *= 1.5;
    }
    breaks.push(upper);

    let mut res = integrate_with_breaks(g, &breaks, cfg)?;
    res.evaluations += evals;
    Ok(res)
}

/// Integral of `f` over the whole real line, folded about `center` into a
/// half-line integral of `f(center + s) + f(center - s)`.
pub fn integrate_real_line<F>(f: F, center: f64, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    integrate_half_line(|s| f(center + s) + f(center - s), cfg)
}

/// Real-valued convenience wrapper around [`integrate_half_line`].
pub fn integrate_half_line_real<F>(f: F, cfg: &QuadConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    integrate_half_line(|y| Complex64::new(f(y), 0.0), cfg).map(|r| r.value.re)
}

/// Real-valued convenience wrapper around [`integrate_interval`].
pub fn integrate_interval_real<F>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    integrate_interval(|y| Complex64::new(f(y), 0.0), a, b, cfg).map(|r| r.value.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(f: impl Fn(f64) -> f64) -> impl Fn(f64) -> Complex64 {
        move |y| Complex64::new(f(y), 0.0)
    }

    /// Γ(x) by upward recurrence into the Stirling regime; independent of the
    /// crate's gamma routines.
    fn gamma_oracle(mut x: f64) -> f64 {
        let mut log_prod = 0.0;
        while x < 20.0 {
            log_prod += x.ln();
            x += 1.0;
        }
        let lgamma = (x - 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln() + 1.0 / (12.0 * x)
            - 1.0 / (360.0 * x.powi(3))
            + 1.0 / (1260.0 * x.powi(5))
            - 1.0 / (1680.0 * x.powi(7));
        (lgamma - log_prod).exp()
    }

    #[test]
    fn exponential_integral_is_one() {
        let cfg = QuadConfig::default().with_rel_tol(1e-12);
        let r = integrate_half_line(real(|y| (-y).exp()), &cfg).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-12, "{}", r.value.re);
        assert!(r.evaluations >= 1);
        assert!(r.err_estimate >= 0.0);
    }

    #[test]
    fn gamma_moment_matches_oracle() {
        let cfg = QuadConfig::default().with_rel_tol(1e-12);
        let r = integrate_half_line(real(|y| y.powf(0.4) * (-y).exp()), &cfg).unwrap();
        let expect = gamma_oracle(1.4);
        assert!((r.value.re - expect).abs() < 1e-10 * expect, "{} vs {}", r.value.re, expect);
    }

    #[test]
    fn peaked_laplace_integrand_is_stable_across_tolerances() {
        let (alpha, r): (f64, f64) = (0.4, 50.0);
        let k = r.powf(1.0 - alpha);
        let peak = alpha.powf(1.0 / (1.0 - alpha)) * r;
        let f = |y: f64| Complex64::new((k * y.powf(alpha) - y).exp(), 0.0);
        let loose = integrate_half_line(f, &QuadConfig::default().with_rel_tol(1e-9).with_peak_hint(peak)).unwrap();
        let tight = integrate_half_line(f, &QuadConfig::default().with_rel_tol(1e-12).with_peak_hint(peak)).unwrap();
        assert!(loose.value.re.is_finite());
        assert!(loose.err_estimate / loose.value.norm() < 1e-9);
        assert!(((loose.value - tight.value).norm() / tight.value.norm()) < 1e-9);
    }

    #[test]
    fn interval_polynomial_is_exact() {
        let r = integrate_interval(real(|x| 3.0 * x * x), 0.0, 2.0, &QuadConfig::default()).unwrap();
        assert!((r.value.re - 8.0).abs() < 1e-13);
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        // 0.5 is the centre of the single initial panel.
        let err = integrate_with_breaks(real(|x| if x == 0.5 { f64::NAN } else { x }), &[0.0, 1.0], &QuadConfig::default());
        assert!(matches!(err, Err(Error::NonFiniteSample { .. })));
    }

    #[test]
    fn non_convergence_is_reported() {
        let cfg = QuadConfig::new(1e-14, 0.0, 2, None).unwrap();
        let err = integrate_interval(real(|x| x.sqrt().sin() / x.sqrt()), 0.0, 1.0, &cfg);
        assert!(matches!(err, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn config_validation() {
        assert!(QuadConfig::new(0.0, 0.0, 5, None).is_err());
        assert!(QuadConfig::new(1e-8, -1.0, 5, None).is_err());
        assert!(QuadConfig::new(1e-8, 0.0, 0, None).is_err());
        assert!(QuadConfig::new(1e-8, 0.0, 5, Some(-1.0)).is_err());
        assert!(QuadConfig::new(1e-8, 0.0, 5, Some(2.0)).is_ok());
    }

    #[test]
    fn oscillating_complex_integrand() {
        // ∫ e^{(i-1) y} dy = 1 / (1 - i)
        let r = integrate_half_line(|y| (Complex64::new(-1.0, 1.0) * y).exp(), &QuadConfig::default()).unwrap();
        let expect = Complex64::new(1.0, 0.0) / Complex64::new(1.0, -1.0);
        assert!((r.value - expect).norm() < 1e-12);
    }

    #[test]
    fn gaussian_over_the_real_line() {
        // ∫ e^{-(s-3)²} ds = √π, folded about a point away from the peak
        let r = integrate_real_line(|s| Complex64::new((-(s - 3.0) * (s - 3.0)).exp(), 0.0), 1.0, &QuadConfig::default()).unwrap();
        assert!((r.value.re - std::f64::consts::PI.sqrt()).abs() < 1e-12);
    }
}
