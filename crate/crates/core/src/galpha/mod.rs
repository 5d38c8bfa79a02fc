//! The slit-plane function
//!
//! ```text
//! G_α(z) = (2iπz)^{-1} ∫₀^∞ [exp(-e^{-iπα} y^α z^{1-α}) - exp(-e^{iπα} y^α z^{1-α})] e^{-y} dy
//! ```
//!
//! analytic on `C ∖ ]-∞, 0]`, its boundary values on the cut, and the angle
//! `θ(r)` of the polar form `G_α(-r⁺) = R(r) e^{-iπθ(r)}`.
//!
//! Four evaluators are available: the convergent power series in
//! `z^{1-α}`, quadrature along the half-line, quadrature along a deformed
//! path (right half-plane only) and the large-`z` asymptotic law.

pub mod descent;
pub mod ray;

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{OnceLock, RwLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::numerics::{cos_pi, sin_pi, LogComplex, QuadConfig};
use crate::series::{stable_series, stable_series_f64, stable_series_re, SeriesArg};
use crate::stable::{density, DensityMethod, StableParams};

pub use descent::{descent, kanter_u};
pub use ray::{exp_power_integral, ray};

/// Cancellation up to which the plain `f64` series is preferred by `Auto`.
const AUTO_SERIES_CANCELLATION: f64 = 1e2;

/// `|z|^{1-α}` beyond which `Auto` does not even try the series.
const AUTO_SERIES_MAX_W: f64 = 30.0;

/// Phases `|t|` up to which `Integral` uses the deformed path.
const DESCENT_MAX_PHASE: f64 = 0.45;

/// Agreement required between the asymptotic law and quadrature to fix R_asym.
const ASYMPTOTIC_MATCH: f64 = 1e-6;

/// A point `z = r e^{iπt}` of the slit plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlitPoint {
    pub r: f64,
    pub t: f64,
}

impl SlitPoint {
    pub fn new(r: f64, t: f64) -> Result<Self> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::Domain(format!("modulus must be positive, got {r}")));
        }
        if !(t > -1.0 && t < 1.0) {
            return Err(Error::Domain(format!(
                "phase/π must lie in (-1, 1), got {t}; use a cut point for ±1"
            )));
        }
        Ok(SlitPoint { r, t })
    }

    pub fn positive(x: f64) -> Result<Self> {
        Self::new(x, 0.0)
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.r * cos_pi(self.t), self.r * sin_pi(self.t))
    }

    pub fn conj(&self) -> Self {
        SlitPoint { r: self.r, t: -self.t }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

/// A point `-r` of the cut, approached from above or below.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutPoint {
    pub r: f64,
    pub side: Side,
}

impl CutPoint {
    pub fn new(r: f64, side: Side) -> Result<Self> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::Domain(format!("modulus must be positive, got {r}")));
        }
        Ok(CutPoint { r, side })
    }

    pub fn upper(r: f64) -> Result<Self> {
        Self::new(r, Side::Upper)
    }
}

/// Constants of the large-`z` law `G_α(z) ~ c z^{-1/2} e^{-δz}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticConstants {
    pub delta: f64,
    /// `(1-α)^{-1/2} α^{1/(2(1-α))}` as printed.
    pub c_paper: f64,
    /// `c_paper / √(2π)`, the prefactor actually attained.
    pub c_adopted: f64,
}

pub fn constants(alpha: f64) -> AsymptoticConstants {
    let delta = (1.0 - alpha) * alpha.powf(alpha / (1.0 - alpha));
    let c_paper = (1.0 - alpha).powf(-0.5) * alpha.powf(1.0 / (2.0 * (1.0 - alpha)));
    AsymptoticConstants {
        delta,
        c_paper,
        c_adopted: c_paper / (2.0 * PI).sqrt(),
    }
}

/// `lim_{z→0} z^α G_α(z) = Γ(α+1) sin(πα) / π`.
pub fn small_z_constant(alpha: f64) -> f64 {
    gamma(alpha + 1.0) * sin_pi(alpha) / PI
}

/// The small-`z` constant with `sin(2πα)` in place of `sin(πα)`; kept only
/// so reports can show that it does not match.
pub fn small_z_constant_printed(alpha: f64) -> f64 {
    gamma(alpha + 1.0) * sin_pi(2.0 * alpha) / PI
}

/// `G_α(-r⁺) = R e^{-iπθ}`, with `R` kept as a logarithm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarValue {
    pub log_modulus: f64,
    pub theta: f64,
}

impl PolarValue {
    pub fn modulus(&self) -> f64 {
        self.log_modulus.exp()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Series,
    /// Half-line quadrature; the deformed path when `|t| ≤ 0.45`.
    Integral,
    Ray,
    Descent,
    Asymptotic,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GValue {
    pub value: LogComplex,
    pub method: Method,
}

impl GValue {
    pub fn to_complex(&self) -> Result<Complex64> {
        self.value.to_complex()
    }
}

/// Evaluator for `G_α` at a fixed `α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GAlpha {
    pub alpha: f64,
    pub cfg: QuadConfig,
}

impl GAlpha {
    pub fn new(alpha: f64) -> Result<Self> {
        Self::with_config(alpha, QuadConfig::default())
    }

    pub fn with_config(alpha: f64, cfg: QuadConfig) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::Domain(format!("alpha must lie in (0, 1), got {alpha}")));
        }
        cfg.validate()?;
        Ok(GAlpha { alpha, cfg })
    }

    pub fn constants(&self) -> AsymptoticConstants {
        constants(self.alpha)
    }

    fn series_arg(&self, r: f64, t: f64) -> SeriesArg {
        SeriesArg {
            r,
            t,
            power: 1.0 - self.alpha,
        }
    }

    // S(z^{1-α}) / (πz)
    fn scale_series(&self, s: LogComplex, r: f64, t: f64) -> LogComplex {
        s / LogComplex::new((PI * r).ln(), t)
    }

    fn series(&self, r: f64, t: f64) -> Result<LogComplex> {
        let s = stable_series(self.alpha, self.alpha, self.series_arg(r, t))?;
        Ok(self.scale_series(s.value, r, t))
    }

    /// `c z^{-1/2} e^{-δz}`.
    pub fn asymptotic(&self, p: SlitPoint) -> LogComplex {
        let k = self.constants();
        let z = p.z();
        LogComplex::new(k.c_adopted.ln() - 0.5 * p.r.ln(), -0.5 * p.t) * LogComplex::exp_of(-z * k.delta)
    }

    fn integral(&self, p: SlitPoint) -> Result<LogComplex> {
        if p.t.abs() <= DESCENT_MAX_PHASE {
            descent(self.alpha, p, &self.cfg)
        } else {
            ray(self.alpha, p.r, p.t, &self.cfg)
        }
    }

    /// G_α(z) in log form. On the positive axis the value is exactly real.
    pub fn eval(&self, p: SlitPoint, method: Method) -> Result<GValue> {
        let mut v = self.eval_unsnapped(p, method)?;
        if p.t == 0.0 {
            v.value.phase_over_pi = 0.0;
        }
        Ok(v)
    }

    fn eval_unsnapped(&self, p: SlitPoint, method: Method) -> Result<GValue> {
        let value = match method {
            Method::Series => self.series(p.r, p.t)?,
            Method::Integral => self.integral(p)?,
            Method::Ray => ray(self.alpha, p.r, p.t, &self.cfg)?,
            Method::Descent => descent(self.alpha, p, &self.cfg)?,
            Method::Asymptotic => self.asymptotic(p),
            Method::Auto => return self.eval_auto(p),
        };
        Ok(GValue { value, method })
    }

    fn eval_auto(&self, p: SlitPoint) -> Result<GValue> {
        if p.r.powf(1.0 - self.alpha) <= AUTO_SERIES_MAX_W {
            let s = stable_series_f64(self.alpha, self.alpha, self.series_arg(p.r, p.t));
            if let Some(s) = s.ok().filter(|s| s.cancellation <= AUTO_SERIES_CANCELLATION) {
                return Ok(GValue {
                    value: self.scale_series(s.value, p.r, p.t),
                    method: Method::Series,
                });
            }
        }
        if p.t.abs() <= DESCENT_MAX_PHASE {
            if p.r >= self.r_asym() {
                return Ok(GValue {
                    value: self.asymptotic(p),
                    method: Method::Asymptotic,
                });
            }
            return Ok(GValue {
                value: descent(self.alpha, p, &self.cfg)?,
                method: Method::Descent,
            });
        }
        match ray(self.alpha, p.r, p.t, &self.cfg) {
            Ok(value) => Ok(GValue {
                value,
                method: Method::Ray,
            }),
            Err(Error::NonConvergence { .. }) => Ok(GValue {
                value: self.series(p.r, p.t)?,
                method: Method::Series,
            }),
            Err(e) => Err(e),
        }
    }

    /// G_α(z) as a plain complex number.
    pub fn eval_complex(&self, p: SlitPoint, method: Method) -> Result<Complex64> {
        self.eval(p, method)?.to_complex()
    }

    /// G_α on the positive axis, `Auto` method.
    pub fn positive(&self, x: f64) -> Result<f64> {
        Ok(self.eval_complex(SlitPoint::positive(x)?, Method::Auto)?.re)
    }

    /// Boundary value `G_α(-r⁺)` or `G_α(-r⁻)`.
    ///
    /// `Integral` and `Ray` mean the same thing here. `Auto` uses the series
    /// for `r ≤ 1`, where it converges fast and the terms do not cancel.
    pub fn boundary(&self, q: CutPoint, method: Method) -> Result<GValue> {
        let (value, used) = match method {
            Method::Series => (self.series(q.r, 1.0)?, Method::Series),
            Method::Integral | Method::Ray => (ray(self.alpha, q.r, 1.0, &self.cfg)?, Method::Ray),
            Method::Auto if q.r <= 1.0 => (self.series(q.r, 1.0)?, Method::Series),
            Method::Auto => (ray(self.alpha, q.r, 1.0, &self.cfg)?, Method::Ray),
            Method::Descent | Method::Asymptotic => {
                return Err(Error::Domain(format!("{method:?} does not reach the cut")));
            }
        };
        let value = match q.side {
            Side::Upper => value,
            Side::Lower => value.conj(),
        };
        Ok(GValue { value, method: used })
    }

    /// `Re G_α(-r^±)`, accurate relative to itself rather than to `|G_α|`.
    pub fn boundary_re(&self, r: f64) -> Result<f64> {
        let q = CutPoint::upper(r)?;
        let s = stable_series_re(self.alpha, self.alpha, self.series_arg(q.r, 1.0))?;
        // G = S / (πz) with z = -r
        Ok(-s.value.to_complex()?.re / (PI * r))
    }

    /// Polar decomposition `G_α(-r⁺) = R e^{-iπθ}`.
    pub fn theta_at(&self, r: f64) -> Result<PolarValue> {
        let g = self.boundary(CutPoint::upper(r)?, Method::Auto)?.value;
        let theta = -g.phase_over_pi;
        if !(theta > 0.0 && theta < 1.0) {
            return Err(Error::Domain(format!(
                "angle {theta} at r = {r} is outside (0, 1)"
            )));
        }
        Ok(PolarValue {
            log_modulus: g.log_mod,
            theta,
        })
    }

    /// `g_α(x) = x^{-1/(1-α)} G_α(x^{-α/(1-α)})`.
    pub fn to_g(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("x must be positive, got {x}")));
        }
        let a = self.alpha;
        let y = x.powf(-a / (1.0 - a));
        let g = self.eval(SlitPoint::positive(y)?, Method::Auto)?.value;
        Ok((g.log_mod - x.ln() / (1.0 - a)).exp())
    }

    /// Smallest `r = 50·2^k` at which the asymptotic law matches quadrature
    /// on the positive axis to `1e-6`; computed once per `α`.
    pub fn r_asym(&self) -> f64 {
        static CACHE: OnceLock<RwLock<HashMap<u64, f64>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
        let key = self.alpha.to_bits();
        if let Some(r) = cache.read().ok().and_then(|m| m.get(&key).copied()) {
            return r;
        }
        let r = self.search_r_asym();
        if let Ok(mut m) = cache.write() {
            m.entry(key).or_insert(r);
        }
        r
    }

    fn search_r_asym(&self) -> f64 {
        let mut r: f64 = 50.0;
        for _ in 0..24 {
            let p = SlitPoint { r, t: 0.0 };
            if let Ok(q) = descent(self.alpha, p, &self.cfg) {
                if self.asymptotic(p).relative_distance(&q) <= ASYMPTOTIC_MATCH {
                    return r;
                }
            }
            r *= 2.0;
        }
        f64::INFINITY
    }
}

/// `G_α(x) = x^{-1/α} g_α(x^{-(1-α)/α})`, with `g_α` from the stable density.
pub fn from_g(alpha: f64, x: f64, method: DensityMethod) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    let params = StableParams::new(alpha, 1.0)?;
    let y = x.powf(-(1.0 - alpha) / alpha);
    Ok(x.powf(-1.0 / alpha) * density(params, y, method)?)
}

#[cfg(test)]
mod tests;
