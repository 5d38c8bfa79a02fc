//! G_α on the right half-plane through the deformed path
//!
//! ```text
//! G_α(z) = α/(1-α) ∫₀¹ U(φ) e^{-z U(φ)} dφ,   Re z > 0,
//! U(φ)   = (sin απφ / sin πφ)^{1/(1-α)} · sin((1-α)πφ) / sin απφ.
//! ```
//!
//! `U` increases from `δ` at `φ = 0` to `+∞` at `φ = 1`, so after pulling out
//! `e^{-δz}` the integrand is bounded by `U` and carries no cancellation.
//! This is what makes `e^{-δx}`-small values reachable in `f64`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{integrate_with_breaks, sin_pi, LogComplex, QuadConfig};

use super::{constants, SlitPoint};

/// Path function `U(φ)` on `(0, 1)`.
pub fn kanter_u(alpha: f64, phi: f64) -> f64 {
    let d = constants(alpha).delta;
    if phi <= 0.0 {
        return d;
    }
    d * log_u_over_delta(alpha, phi).exp()
}

// ln(sin(πu) / (πu))
fn ln_sinc_pi(u: f64) -> f64 {
    let x = std::f64::consts::PI * u;
    if x.abs() < 0.5 {
        // sin x / x - 1 by its Taylor series; the direct quotient loses
        // the O(x²) part to rounding exactly where it is needed
        let x2 = x * x;
        let mut term = 1.0;
        let mut sum = 0.0;
        for k in 1..=9 {
            term *= -x2 / ((2 * k) as f64 * (2 * k + 1) as f64);
            sum += term;
        }
        sum.ln_1p()
    } else {
        (sin_pi(u) / x).ln()
    }
}

/// `ln(U(φ)/δ)`, accurate to full relative precision as `φ → 0`.
pub fn log_u_over_delta(alpha: f64, phi: f64) -> f64 {
    let la = ln_sinc_pi(alpha * phi);
    let l1 = ln_sinc_pi(phi);
    let lb = ln_sinc_pi((1.0 - alpha) * phi);
    (la - l1) / (1.0 - alpha) + lb - la
}

/// G_α(z) for `|t| < 1/2` along the deformed path.
pub fn descent(alpha: f64, p: SlitPoint, cfg: &QuadConfig) -> Result<LogComplex> {
    if p.t.abs() >= 0.5 {
        return Err(Error::Domain(format!(
            "deformed path needs Re z > 0, got phase {}·π",
            p.t
        )));
    }
    let delta = constants(alpha).delta;
    let z = p.z();
    let integrand = |phi: f64| {
        let d = log_u_over_delta(alpha, phi);
        let u = delta * d.exp();
        let e = -z * (delta * d.exp_m1());
        if !u.is_finite() || !(e.re > -740.0) {
            return Complex64::new(0.0, 0.0);
        }
        e.exp() * u
    };

    // the bulk sits in φ ≲ 1/√r for large r
    let w = (1.0 / p.r.max(1.0).sqrt()).min(0.25);
    let mut breaks = vec![0.0];
    let mut b = w / 16.0;
    while b < 1.0 {
        breaks.push(b);
        b *= 4.0;
    }
    breaks.push(1.0);

    let res = integrate_with_breaks(integrand, &breaks, &cfg.without_peak_hint())?;
    let scaled = res.value * (alpha / (1.0 - alpha));
    Ok(LogComplex::from_complex(scaled) * LogComplex::exp_of(-z * delta))
}
