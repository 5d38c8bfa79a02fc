//! G_α by quadrature along the real half-line.
//!
//! Writing `z = r e^{iπt}`, the defining integral splits into
//!
//! ```text
//! G_α(z) = (T₁ - T₂) / (2iπz),   T_j = ∫₀^∞ exp(c_j y^α - y) dy,
//! c₁ = r^{1-α} e^{iπ(1+t)(1-α)},   c₂ = r^{1-α} e^{iπ(2-(1-t)(1-α))}.
//! ```
//!
//! Near the cut one of the `c_j` has a large positive real part and its
//! integral grows like `e^{δr}`; each `T_j` is therefore computed relative
//! to the maximum of its own integrand and the two are combined in log form.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{cos_pi, integrate_half_line, sin_pi, LogComplex, QuadConfig};

use super::SlitPoint;

/// Largest relative error accepted for the difference `T₁ - T₂`.
const MAX_COMBINED_REL_ERR: f64 = 1e-6;

/// `∫₀^∞ exp(c y^α - y) dy` and its relative error estimate.
pub fn exp_power_integral(alpha: f64, c: Complex64, cfg: &QuadConfig) -> Result<(LogComplex, f64)> {
    // max of Re(c) y^α - y is at y* = (α Re c)^{1/(1-α)}
    let (peak, shift) = if c.re > 0.0 {
        let y_star = (alpha * c.re).powf(1.0 / (1.0 - alpha));
        (y_star, y_star * (1.0 - alpha) / alpha)
    } else {
        (0.0, 0.0)
    };
    let cfg = if peak > 1.0 {
        cfg.with_peak_hint(peak)
    } else {
        cfg.without_peak_hint()
    };
    let res = integrate_half_line(
        |y: f64| (c * y.powf(alpha) - y - shift).exp(),
        &cfg,
    )?;
    Ok((LogComplex::from_scaled(res.value, shift), res.relative_error()))
}

/// G_α at `r e^{iπt}` for any `t ∈ [-1, 1]`; `t = ±1` gives the boundary
/// value from the upper or lower side.
pub fn ray(alpha: f64, r: f64, t: f64, cfg: &QuadConfig) -> Result<LogComplex> {
    let k = r.powf(1.0 - alpha);
    let a1 = (1.0 + t) * (1.0 - alpha);
    let a2 = 2.0 - (1.0 - t) * (1.0 - alpha);
    let c1 = Complex64::new(k * cos_pi(a1), k * sin_pi(a1));
    let c2 = Complex64::new(k * cos_pi(a2), k * sin_pi(a2));
    let (t1, e1) = exp_power_integral(alpha, c1, cfg)?;
    let (t2, e2) = exp_power_integral(alpha, c2, cfg)?;

    let diff = t1 - t2;
    let abs_err = e1 * (t1.log_mod - diff.log_mod).exp() + e2 * (t2.log_mod - diff.log_mod).exp();
    if !(abs_err <= MAX_COMBINED_REL_ERR) {
        return Err(Error::NonConvergence {
            value: diff.log_mod,
            err_estimate: abs_err,
        });
    }
    // 2iπz = 2πr e^{iπ(1/2 + t)}
    let denom = LogComplex::new((2.0 * std::f64::consts::PI * r).ln(), 0.5 + t);
    Ok(diff / denom)
}

/// Ray evaluation at an interior slit-plane point.
pub fn ray_at(alpha: f64, p: SlitPoint, cfg: &QuadConfig) -> Result<LogComplex> {
    ray(alpha, p.r, p.t, cfg)
}
