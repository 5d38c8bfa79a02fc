//! Strictly stable densities `g_{α,ρ}` on `(0, ∞)`.
//!
//! `g_{α,ρ}` is defined by
//!
//! ```text
//! g_{α,ρ}(x) = (2iπx)^{-1} ∫₀^∞ [exp(-e^{-iπρα} y^α x^{-α}) - exp(-e^{iπρα} y^α x^{-α})] e^{-y} dy
//! ```
//!
//! and `g_α = g_{α,1}` is the one-sided density with Laplace transform
//! `e^{-λ^α}`. Besides the density itself the module has the product,
//! power and subordination constructions used to relate different `α`.

use std::cell::RefCell;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galpha::{GAlpha, Method, SlitPoint};
use crate::numerics::{
    integrate_half_line, integrate_real_line, sin_pi, cos_pi, LogComplex, QuadConfig,
};
use crate::series::{stable_series, stable_series_f64, SeriesArg};

/// Cancellation up to which `Auto` trusts the plain `f64` series.
const AUTO_SERIES_CANCELLATION: f64 = 1e2;

/// `x^{-α}` beyond which `Auto` skips the series attempt.
const AUTO_SERIES_MAX_W: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StableParams {
    pub alpha: f64,
    pub rho: f64,
}

impl StableParams {
    pub fn new(alpha: f64, rho: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::Domain(format!("alpha must lie in (0, 1), got {alpha}")));
        }
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(Error::Domain(format!("rho must lie in (0, 1], got {rho}")));
        }
        Ok(StableParams { alpha, rho })
    }

    /// The one-sided law, `ρ = 1`.
    pub fn positive(alpha: f64) -> Result<Self> {
        Self::new(alpha, 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityMethod {
    Integral,
    Series,
    /// `(2√π)^{-1} x^{-3/2} e^{-1/(4x)}`; only for `α = 1/2, ρ = 1`.
    ClosedFormLevy,
    /// Through `G_α` on the deformed path; only for `ρ = 1`.
    Kanter,
    Auto,
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("x must be positive and finite, got {x}")));
    }
    Ok(())
}

/// Density of the one-sided `1/2`-stable law, `(2√π)^{-1} x^{-3/2} e^{-1/(4x)}`.
pub fn levy_density(x: f64) -> f64 {
    x.powf(-1.5) * (-0.25 / x).exp() / (2.0 * PI.sqrt())
}

/// `g_{α,ρ}(x)`.
pub fn density(params: StableParams, x: f64, method: DensityMethod) -> Result<f64> {
    density_with(params, x, method, &QuadConfig::default())
}

/// `g_{α,ρ}(x)` with an explicit quadrature configuration.
pub fn density_with(params: StableParams, x: f64, method: DensityMethod, cfg: &QuadConfig) -> Result<f64> {
    check_x(x)?;
    match method {
        DensityMethod::Integral => density_integral(params, x, cfg),
        DensityMethod::Series => density_series(params, x),
        DensityMethod::ClosedFormLevy => {
            if params.alpha != 0.5 || params.rho != 1.0 {
                return Err(Error::Domain("the closed form needs alpha = 1/2, rho = 1".into()));
            }
            Ok(levy_density(x))
        }
        DensityMethod::Kanter => density_kanter(params, x, cfg),
        DensityMethod::Auto => {
            let w = x.powf(-params.alpha);
            if w <= AUTO_SERIES_MAX_W {
                let s = stable_series_f64(params.alpha, params.rho * params.alpha, series_arg(params, x));
                if let Ok(s) = s.as_ref() {
                    if s.cancellation <= AUTO_SERIES_CANCELLATION {
                        return Ok(series_value(s.value, x));
                    }
                }
            }
            if params.rho == 1.0 {
                density_kanter(params, x, cfg)
            } else {
                density_integral(params, x, cfg)
            }
        }
    }
}

fn series_arg(params: StableParams, x: f64) -> SeriesArg {
    SeriesArg {
        r: x,
        t: 0.0,
        power: -params.alpha,
    }
}

// S(x^{-α}) / (πx), real part
fn series_value(s: LogComplex, x: f64) -> f64 {
    let (ln_re, sign) = s.ln_abs_re();
    sign * (ln_re - (PI * x).ln()).exp()
}

/// `g_{α,ρ}(x)` from its expansion in powers of `x^{-α}`.
pub fn density_series(params: StableParams, x: f64) -> Result<f64> {
    check_x(x)?;
    let s = stable_series(params.alpha, params.rho * params.alpha, series_arg(params, x))?;
    Ok(series_value(s.value, x))
}

/// `g_{α,ρ}(x)` by quadrature of the defining integral.
pub fn density_integral(params: StableParams, x: f64, cfg: &QuadConfig) -> Result<f64> {
    check_x(x)?;
    let phase = params.rho * params.alpha;
    let k = x.powf(-params.alpha);
    let c1 = -Complex64::new(cos_pi(phase), -sin_pi(phase)) * k;
    let c2 = -Complex64::new(cos_pi(phase), sin_pi(phase)) * k;
    // when ρα > 1/2 both exponentials grow before e^{-y} wins
    let (peak, shift) = if c1.re > 0.0 {
        let y_star = (params.alpha * c1.re).powf(1.0 / (1.0 - params.alpha));
        (y_star, y_star * (1.0 - params.alpha) / params.alpha)
    } else {
        (0.0, 0.0)
    };
    let cfg = if peak > 1.0 {
        cfg.with_peak_hint(peak)
    } else {
        cfg.without_peak_hint()
    };
    let res = integrate_half_line(
        |y: f64| {
            let ya = y.powf(params.alpha);
            ((c1 * ya).exp() - (c2 * ya).exp()) * (-y - shift).exp()
        },
        &cfg,
    )?;
    let v = LogComplex::from_scaled(res.value, shift) / LogComplex::new((2.0 * PI * x).ln(), 0.5);
    let (ln_re, sign) = v.ln_abs_re();
    Ok(sign * ln_re.exp())
}

fn density_kanter(params: StableParams, x: f64, cfg: &QuadConfig) -> Result<f64> {
    if params.rho != 1.0 {
        return Err(Error::Domain("the Kanter path needs rho = 1".into()));
    }
    let a = params.alpha;
    let g = GAlpha::with_config(a, *cfg)?;
    let y = x.powf(-a / (1.0 - a));
    let v = g.eval(SlitPoint::positive(y)?, Method::Descent)?.value;
    let (ln_re, sign) = v.ln_abs_re();
    Ok(sign * (ln_re - x.ln() / (1.0 - a)).exp())
}

/// `x^{-1-α} g_{α,ρ}(1/x)`.
pub fn tilde_density(params: StableParams, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(x.powf(-1.0 - params.alpha) * density(params, 1.0 / x, DensityMethod::Auto)?)
}

/// Runs a fallible real evaluator inside a quadrature, keeping the first
/// error so it can be reported instead of a generic non-finite sample.
struct Guard {
    first: RefCell<Option<Error>>,
}

impl Guard {
    fn new() -> Self {
        Guard {
            first: RefCell::new(None),
        }
    }

    fn call(&self, v: Result<f64>) -> f64 {
        match v {
            Ok(v) => v,
            Err(e) => {
                self.first.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    }

    fn finish(self, res: Result<f64>) -> Result<f64> {
        match (self.first.into_inner(), res) {
            (Some(e), _) => Err(e),
            (None, r) => r,
        }
    }
}

/// Total mass `∫₀^∞ g_{α,ρ}(x) dx`, computed in `s = ln x`.
pub fn mass(params: StableParams, cfg: &QuadConfig) -> Result<f64> {
    let guard = Guard::new();
    let res = integrate_real_line(
        |s: f64| {
            let x = s.exp();
            if x == 0.0 || !x.is_finite() {
                return Complex64::new(0.0, 0.0);
            }
            Complex64::new(guard.call(density_with(params, x, DensityMethod::Auto, cfg)) * x, 0.0)
        },
        0.0,
        cfg,
    )
    .map(|r| r.value.re);
    guard.finish(res)
}

/// Density of `XY` for independent `X ~ f`, `Y ~ g`:
/// `∫₀^∞ f(y) g(x/y) dy / y`.
pub fn mult_convolution<F, G>(f: F, g: G, x: f64, cfg: &QuadConfig) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
    G: Fn(f64) -> Result<f64>,
{
    check_x(x)?;
    let guard = Guard::new();
    let ln_x = x.ln();
    let res = integrate_real_line(
        |s: f64| {
            let y = s.exp();
            let q = (ln_x - s).exp();
            if y == 0.0 || q == 0.0 || !y.is_finite() || !q.is_finite() {
                return Complex64::new(0.0, 0.0);
            }
            let a = guard.call(f(y));
            if a == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            Complex64::new(a * guard.call(g(q)), 0.0)
        },
        0.5 * ln_x,
        &cfg.without_peak_hint(),
    )
    .map(|r| r.value.re);
    guard.finish(res)
}

/// Density of `X^p` at `x` when `X` has density `f`.
pub fn pushforward_power<F>(f: F, p: f64, x: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    check_x(x)?;
    if p == 0.0 || !p.is_finite() {
        return Err(Error::Domain(format!("power must be finite and nonzero, got {p}")));
    }
    let q = 1.0 / p;
    let y = x.powf(q);
    if y == 0.0 || !y.is_finite() {
        return Ok(0.0);
    }
    let fy = f(y)?;
    if fy == 0.0 {
        return Ok(0.0);
    }
    Ok(q.abs() * x.powf(q - 1.0) * fy)
}

/// The mixture
///
/// ```text
/// 2α ∫₀^∞ g_{2α,ρ}(y) exp(-(y/x)^{2α} / 2) y^α / (√(2π) x^{α+1}) dy,   α = alpha2 / 2,
/// ```
///
/// which subordinates `g_{2α,ρ}` by the `1/2`-stable law with density
/// `e^{-1/(2t)} / √(2πt³)`. That subordinator has Laplace transform
/// `e^{-√(2λ)}`, so the mixture equals `s⁻¹ g_{α,ρ}(x/s)` with
/// `s = 2^{1/(2α)}` rather than `g_{α,ρ}(x)` itself.
pub fn subordination_mixture(alpha2: f64, rho: f64, x: f64, cfg: &QuadConfig) -> Result<f64> {
    check_x(x)?;
    let inner = StableParams::new(alpha2, rho)?;
    let a = alpha2 / 2.0;
    let norm = 2.0 * a / ((2.0 * PI).sqrt() * x.powf(a + 1.0));
    let guard = Guard::new();
    let res = integrate_real_line(
        |s: f64| {
            let y = s.exp();
            if y == 0.0 || !y.is_finite() {
                return Complex64::new(0.0, 0.0);
            }
            let damp = -0.5 * (y / x).powf(alpha2);
            if damp < -745.0 {
                return Complex64::new(0.0, 0.0);
            }
            let g = guard.call(density_with(inner, y, DensityMethod::Auto, cfg));
            Complex64::new(g * damp.exp() * y.powf(a) * y, 0.0)
        },
        x.ln(),
        &cfg.without_peak_hint(),
    )
    .map(|r| norm * r.value.re);
    guard.finish(res)
}

/// Argument scale `s = 2^{1/(2α)}` relating [`subordination_mixture`] to `g_{α,ρ}`.
pub fn subordination_scale(alpha: f64) -> f64 {
    2f64.powf(1.0 / (2.0 * alpha))
}
