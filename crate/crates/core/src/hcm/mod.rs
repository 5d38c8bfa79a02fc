//! Numerical evidence for complete monotonicity (CM) and hyperbolic
//! complete monotonicity (HCM).
//!
//! `f` is CM when every alternating difference `(-1)^k Δ_h^k f(x)` is
//! nonnegative. `H` is HCM when `H(uv) H(u/v)` is CM in `w = v + 1/v` for
//! every `u > 0`. A "consistent" verdict only means no violation above
//! tolerance was seen at the sampled points.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{alternating_differences, QuadConfig};
use crate::stable::mult_convolution;

/// One atom `w δ_t` of a discrete measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub t: f64,
    pub w: f64,
}

/// `H(x) = c x^{β-1} exp(-a₁x - Σ w log((x+t)/(1+t)) - a₂/x - Σ w log((1/x+t)/(1+t)))`
/// with the two sums over the atoms of `μ₁` and `μ₂`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HCMRepresentation {
    pub c: f64,
    pub beta: f64,
    pub a1: f64,
    pub a2: f64,
    pub mu1: Vec<Atom>,
    pub mu2: Vec<Atom>,
}

impl HCMRepresentation {
    /// `c x^{β-1}` with no exponential factors.
    pub fn power(c: f64, beta: f64) -> Self {
        HCMRepresentation {
            c,
            beta,
            a1: 0.0,
            a2: 0.0,
            mu1: Vec::new(),
            mu2: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::Domain(format!("c must be positive, got {}", self.c)));
        }
        if !self.beta.is_finite() {
            return Err(Error::Domain("beta must be finite".into()));
        }
        if !(self.a1 >= 0.0 && self.a2 >= 0.0) {
            return Err(Error::Domain(format!("a1, a2 must be >= 0, got {}, {}", self.a1, self.a2)));
        }
        for a in self.mu1.iter().chain(&self.mu2) {
            if !(a.t >= 1.0 && a.t.is_finite() && a.w > 0.0 && a.w.is_finite()) {
                return Err(Error::Domain(format!("atoms need t >= 1 and w > 0, got {a:?}")));
            }
        }
        Ok(())
    }
}

fn log_ratio_sum(mu: &[Atom], x: f64) -> f64 {
    mu.iter().map(|a| a.w * ((x + a.t) / (1.0 + a.t)).ln()).sum()
}

pub fn eval_representation(rep: &HCMRepresentation, x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    rep.validate()?;
    let inv = 1.0 / x;
    let expo = (rep.beta - 1.0) * x.ln()
        - rep.a1 * x
        - log_ratio_sum(&rep.mu1, x)
        - rep.a2 * inv
        - log_ratio_sum(&rep.mu2, inv);
    Ok(rep.c * expo.exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CmVerdict {
    Consistent,
    Violated,
}

/// Where the worst alternating difference was found. `u` is set only by
/// [`hcm_check`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub x0: f64,
    pub h: f64,
    pub k: usize,
    pub u: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CMReport {
    pub verdict: CmVerdict,
    /// Largest `-(-1)^k Δ_h^k f(x₀) / max|f|` over the stencil, or 0.
    pub max_violation: f64,
    pub witness: Option<Witness>,
    pub orders: usize,
    pub tol: f64,
}

impl CMReport {
    pub fn is_consistent(&self) -> bool {
        self.verdict == CmVerdict::Consistent
    }

    fn worse(self, other: CMReport) -> CMReport {
        if other.max_violation > self.max_violation {
            other
        } else {
            self
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Checker parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CmConfig {
    /// Highest difference order `K`, at most 8.
    pub orders: usize,
    /// Violations are measured relative to `max|f|` on the stencil.
    pub tol: f64,
    /// Steps `h = x₀ 2^{-m}` for `m` in this range.
    pub m_min: u32,
    pub m_max: u32,
}

impl Default for CmConfig {
    fn default() -> Self {
        CmConfig {
            orders: 8,
            tol: 1e-7,
            m_min: 3,
            m_max: 10,
        }
    }
}

impl CmConfig {
    fn validate(&self) -> Result<()> {
        if self.orders == 0 || self.orders > 8 {
            return Err(Error::Domain(format!("orders must be in 1..=8, got {}", self.orders)));
        }
        if !(self.tol >= 0.0) || self.m_min > self.m_max {
            return Err(Error::Domain("bad CM checker configuration".into()));
        }
        Ok(())
    }
}

/// Alternating-difference test of `f` on `(a, ∞)` at the points `x0s`.
/// Stencils extend to the right of each point.
pub fn cm_check<F>(f: F, a: f64, x0s: &[f64], cfg: &CmConfig) -> Result<CMReport>
where
    F: Fn(f64) -> Result<f64>,
{
    cfg.validate()?;
    if let Some(x) = x0s.iter().find(|x| !(**x > a && x.is_finite())) {
        return Err(Error::Domain(format!("stencil start {x} outside ({a}, ∞)")));
    }
    let mut report = CMReport {
        verdict: CmVerdict::Consistent,
        max_violation: 0.0,
        witness: None,
        orders: cfg.orders,
        tol: cfg.tol,
    };
    let mut worst = f64::NEG_INFINITY;
    for &x0 in x0s {
        for m in cfg.m_min..=cfg.m_max {
            let h = x0 * 0.5f64.powi(m as i32);
            let mut samples = Vec::with_capacity(cfg.orders + 1);
            for j in 0..=cfg.orders {
                let x = x0 + j as f64 * h;
                let v = f(x)?;
                if !v.is_finite() {
                    return Err(Error::NonFiniteSample { at: x });
                }
                samples.push(v);
            }
            let scale = samples.iter().fold(0.0f64, |s, v| s.max(v.abs()));
            if scale == 0.0 {
                continue;
            }
            let d = alternating_differences(&samples, cfg.orders)?;
            for (k, dk) in d.iter().enumerate() {
                let v = -dk / scale;
                if v > worst {
                    worst = v;
                    report.witness = Some(Witness { x0, h, k, u: None });
                }
            }
        }
    }
    report.max_violation = worst.max(0.0);
    if report.max_violation > cfg.tol {
        report.verdict = CmVerdict::Violated;
    }
    Ok(report)
}

pub const DEFAULT_U_SET: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];

/// `n` points `a + 10^s` with `s` evenly spaced so the first is `a + 1e-4`
/// and the last `b`.
pub fn offset_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let top = (b - a).log10();
    (0..n)
        .map(|i| {
            let s = -4.0 + (top + 4.0) * i as f64 / (n.max(2) - 1) as f64;
            a + 10f64.powf(s)
        })
        .collect()
}

/// `w` points on `(2, 50]`, crowded towards 2.
pub fn default_w_grid() -> Vec<f64> {
    offset_grid(2.0, 50.0, 24)
}

/// Root `v ≥ 1` of `v + 1/v = w`.
pub fn v_from_w(w: f64) -> f64 {
    0.5 * (w + ((w - 2.0) * (w + 2.0)).sqrt())
}

/// CM test of `w ↦ H(uv) H(u/v)` for each `u`; the worst report is kept.
pub fn hcm_check<F>(h: F, u_set: &[f64], w_grid: &[f64], cfg: &CmConfig) -> Result<CMReport>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let reports = u_set
        .par_iter()
        .map(|&u| {
            let phi = |w: f64| -> Result<f64> {
                let v = v_from_w(w);
                Ok(h(u * v)? * h(u / v)?)
            };
            cm_check(phi, 2.0, w_grid, cfg).map(|mut r| {
                if let Some(wit) = r.witness.as_mut() {
                    wit.u = Some(u);
                }
                r
            })
        })
        .collect::<Result<Vec<CMReport>>>()?;
    Ok(reports
        .into_iter()
        .reduce(CMReport::worse)
        .unwrap_or(CMReport {
            verdict: CmVerdict::Consistent,
            max_violation: 0.0,
            witness: None,
            orders: cfg.orders,
            tol: cfg.tol,
        }))
}

/// [`hcm_check`] with the default `u` set, `w` grid and checker settings.
pub fn hcm_check_default<F>(h: F) -> Result<CMReport>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    hcm_check(h, &DEFAULT_U_SET, &default_w_grid(), &CmConfig::default())
}

/// `x ↦ H(1/x)`.
pub fn transform_invert<F>(h: F) -> impl Fn(f64) -> Result<f64> + Sync
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    move |x| h(1.0 / x)
}

/// `x ↦ H(x^b)`, `b ≤ 1`.
pub fn transform_power<F>(h: F, b: f64) -> Result<impl Fn(f64) -> Result<f64> + Sync>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    if !(b <= 1.0 && b.is_finite()) {
        return Err(Error::Domain(format!("power must be <= 1, got {b}")));
    }
    Ok(move |x: f64| h(x.powf(b)))
}

/// `x ↦ x^γ H(x)`.
pub fn transform_scalepow<F>(h: F, gamma: f64) -> Result<impl Fn(f64) -> Result<f64> + Sync>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    if !gamma.is_finite() {
        return Err(Error::Domain("exponent must be finite".into()));
    }
    Ok(move |x: f64| Ok(x.powf(gamma) * h(x)?))
}

/// Density of `XY` for independent `X ~ f`, `Y ~ g`.
pub fn transform_product<F, G>(f: F, g: G, cfg: QuadConfig) -> impl Fn(f64) -> Result<f64> + Sync
where
    F: Fn(f64) -> Result<f64> + Sync,
    G: Fn(f64) -> Result<f64> + Sync,
{
    move |x| mult_convolution(&f, &g, x, &cfg)
}

/// Factors in `[1/3, 1/2]` whose product is `α`, when `α` lies in the
/// multiplicative semigroup they generate, `(0, 1/4] ∪ [1/3, 1/2]`.
///
/// Uses `n` equal factors `α^{1/n}` with `n` the least integer in
/// `[log(1/α)/log 3, log(1/α)/log 2]`.
pub fn semigroup_membership(alpha: f64) -> Option<Vec<f64>> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return None;
    }
    const SLACK: f64 = 1e-12;
    let l = (1.0 / alpha).ln();
    let lo = l / 3f64.ln();
    let hi = l / 2f64.ln();
    let n = (lo - SLACK).ceil().max(1.0);
    if n > hi + SLACK {
        return None;
    }
    let f = alpha.powf(1.0 / n);
    if !(1.0 / 3.0 - SLACK..=0.5 + SLACK).contains(&f) {
        return None;
    }
    Some(vec![f; n as usize])
}
