//! The convergent expansion shared by the stable density and G_α:
//!
//! ```text
//! S(w) = Σ_{n≥1} (-1)^{n+1} sin(nπφ) Γ(nα+1)/n! · wⁿ,   w = (r e^{iπt})^p
//! ```
//!
//! The density uses `φ = ρα, w = x^{-α}`; G_α uses `φ = α, w = z^{1-α}`.
//! The series is entire in `w`, but for large `|w|` on the decaying side the
//! terms cancel catastrophically. The sum is first formed in `f64`; when the
//! ratio `Σ|tₙ| / |S|` shows that too many digits were lost, it is redone
//! in MPFR with enough bits to absorb the cancellation.

use std::f64::consts::PI;

use num_complex::Complex64;
use rug::float::Constant;
use rug::{Complex, Float};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::numerics::{sin_pi, LogComplex};

/// Largest tolerated `Σ|tₙ| / |S|`; beyond it the series refuses.
pub const MAX_CANCELLATION: f64 = 1e100;

/// `Σ|tₙ| / |S|` up to which the `f64` sum is trusted (≈ 1e-12 relative).
pub const F64_CANCELLATION: f64 = 1e4;

const MAX_TERMS: usize = 2_000_000;
const GUARD_BITS: u32 = 64;

/// Point `w = (r e^{iπt})^p` at which the series is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesArg {
    pub r: f64,
    pub t: f64,
    pub power: f64,
}

impl SeriesArg {
    fn ln_modulus(&self) -> f64 {
        self.power * self.r.ln()
    }

    fn angle(&self) -> f64 {
        PI * self.t * self.power
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: LogComplex,
    /// `Σ|tₙ| / |S|`, the factor by which rounding errors are amplified.
    pub cancellation: f64,
    /// `ln Σ|tₙ|`.
    pub ln_abs_sum: f64,
    pub terms: usize,
    /// MPFR precision used, or `None` for a plain `f64` sum.
    pub bits: Option<u32>,
}

// log of the n-th term's modulus without the sine factor
fn envelope(alpha: f64, n: usize, ln_w: f64) -> f64 {
    let nf = n as f64;
    ln_gamma(nf * alpha + 1.0) - ln_gamma(nf + 1.0) + nf * ln_w
}

/// Number of terms needed to get `depth` below the largest envelope value,
/// and that largest value.
fn term_budget(alpha: f64, ln_w: f64, depth: f64) -> Result<(usize, f64)> {
    let mut peak = f64::NEG_INFINITY;
    let mut prev = f64::NEG_INFINITY;
    let mut n = 1usize;
    loop {
        let e = envelope(alpha, n, ln_w);
        peak = peak.max(e);
        // past the maximum the envelope is decreasing and log-concave
        if e < prev && e < peak - depth {
            return Ok((n, peak));
        }
        prev = e;
        n += 1;
        if n > MAX_TERMS {
            return Err(Error::CancellationOverflow { ratio: f64::INFINITY });
        }
    }
}

fn sum_f64(alpha: f64, phase: f64, arg: SeriesArg, n_terms: usize, peak: f64) -> (Complex64, f64) {
    let ln_w = arg.ln_modulus();
    let psi = arg.angle();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    for n in 1..=n_terms {
        let s = sin_pi(n as f64 * phase);
        if s == 0.0 {
            continue;
        }
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let mag = (envelope(alpha, n, ln_w) - peak).exp() * s.abs();
        let coef = sign * s.signum() * mag;
        sum += Complex64::from_polar(coef.abs(), psi * n as f64 + if coef < 0.0 { PI } else { 0.0 });
        abs_sum += mag;
    }
    (sum, abs_sum)
}

/// `x` at `bits` precision, read as `p/q` when it is within two ulps of a
/// fraction with `q ≤ 1000`.
///
/// At heavy cancellation the sum is sensitive to the last bits of `α`, and
/// `fl(1/3)` is not one third.
fn exact_float(x: f64, bits: u32) -> Float {
    let tol = 2.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE);
    for q in 1..=1000u32 {
        let p = (x * q as f64).round();
        if (x - p / q as f64).abs() <= tol {
            return Float::with_val(bits, p as i64) / q;
        }
    }
    Float::with_val(bits, x)
}

fn sum_mpfr(alpha: f64, phase: f64, arg: SeriesArg, n_terms: usize, bits: u32) -> Complex {
    let pi = Float::with_val(bits, Constant::Pi);
    let ln_r = Float::with_val(bits, arg.r).ln();
    let power = exact_float(arg.power, bits);
    let w_mod = (ln_r * &power).exp();
    let ang = Float::with_val(bits, &pi * exact_float(arg.t, bits)) * &power;
    let w = Complex::with_val(bits, (Float::with_val(bits, &w_mod * ang.clone().cos()), w_mod * ang.sin()));

    let alpha_mp = exact_float(alpha, bits);
    let phase_mp = exact_float(phase, bits);
    let mut w_pow = Complex::with_val(bits, (1, 0));
    let mut factorial = Float::with_val(bits, 1);
    let mut sum = Complex::with_val(bits, (0, 0));
    for n in 1..=n_terms {
        w_pow *= &w;
        factorial *= n as u32;
        // reduce nφ mod 2 before multiplying by π
        let mut x = Float::with_val(bits, &phase_mp * n as u32);
        let two_floor = Float::with_val(bits, &x / 2u32).floor() * 2u32;
        x -= two_floor;
        if x.is_zero() || x == 1u32 {
            continue;
        }
        let s = (x * &pi).sin();
        let g = (Float::with_val(bits, &alpha_mp * n as u32) + 1u32).gamma();
        let mut coef = s * g / &factorial;
        if n % 2 == 0 {
            coef = -coef;
        }
        sum += Complex::with_val(bits, &w_pow * &coef);
    }
    sum
}

fn mp_to_log(z: &Complex) -> LogComplex {
    if z.real().is_zero() && z.imag().is_zero() {
        return LogComplex::ZERO;
    }
    let bits = z.prec().0;
    let modulus = Float::with_val(bits, z.abs_ref());
    let ln_mod = modulus.ln().to_f64();
    let arg = Float::with_val(bits, z.arg_ref()).to_f64();
    LogComplex::new(ln_mod, arg / PI)
}

/// Which part of the sum the cancellation is measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Part {
    Full,
    Real,
}

impl Part {
    fn of_f64(self, z: Complex64) -> Complex64 {
        match self {
            Part::Full => z,
            Part::Real => Complex64::new(z.re, 0.0),
        }
    }

    fn of_mpfr(self, z: Complex) -> Complex {
        match self {
            Part::Full => z,
            Part::Real => {
                let bits = z.prec().0;
                Complex::with_val(bits, (z.real(), 0))
            }
        }
    }
}

fn series_f64(alpha: f64, phase: f64, arg: SeriesArg, part: Part) -> Result<SeriesSum> {
    let (n_terms, peak) = term_budget(alpha, arg.ln_modulus(), 40.0)?;
    let (sum, abs_sum) = sum_f64(alpha, phase, arg, n_terms, peak);
    let sum = part.of_f64(sum);
    let cancellation = abs_sum / sum.norm();
    Ok(SeriesSum {
        value: LogComplex::from_scaled(sum, peak),
        cancellation,
        ln_abs_sum: peak + abs_sum.ln(),
        terms: n_terms,
        bits: None,
    })
}

fn series_escalating(alpha: f64, phase: f64, arg: SeriesArg, part: Part) -> Result<SeriesSum> {
    let ln_w = arg.ln_modulus();
    let quick = series_f64(alpha, phase, arg, part)?;
    if quick.cancellation <= F64_CANCELLATION {
        return Ok(quick);
    }

    let ln_abs_sum = quick.ln_abs_sum;
    let mut bits = if quick.cancellation.is_finite() {
        quick.cancellation.log2().ceil() as u32 + GUARD_BITS
    } else {
        106 + GUARD_BITS
    };
    for _ in 0..8 {
        let depth = (bits as f64) * std::f64::consts::LN_2 + 10.0;
        let (n_terms, _) = term_budget(alpha, ln_w, depth)?;
        let sum = part.of_mpfr(sum_mpfr(alpha, phase, arg, n_terms, bits));
        let value = mp_to_log(&sum);
        let cancellation = (ln_abs_sum - value.log_mod).exp();
        if cancellation > MAX_CANCELLATION {
            return Err(Error::CancellationOverflow { ratio: cancellation });
        }
        let needed = cancellation.log2().ceil().max(0.0) as u32;
        if bits >= needed + GUARD_BITS - 4 {
            return Ok(SeriesSum {
                value,
                cancellation,
                ln_abs_sum,
                terms: n_terms,
                bits: Some(bits),
            });
        }
        bits = needed + GUARD_BITS + 16;
    }
    Err(Error::CancellationOverflow {
        ratio: quick.cancellation,
    })
}

/// Sum the series in `f64` only; never escalates precision.
pub fn stable_series_f64(alpha: f64, phase: f64, arg: SeriesArg) -> Result<SeriesSum> {
    series_f64(alpha, phase, arg, Part::Full)
}

/// Sum the series, escalating to MPFR when the `f64` sum has lost more than
/// about four digits to cancellation.
pub fn stable_series(alpha: f64, phase: f64, arg: SeriesArg) -> Result<SeriesSum> {
    series_escalating(alpha, phase, arg, Part::Full)
}

/// Real part of the sum, with precision chosen for the real part alone.
/// It can be far smaller than the modulus when `w` is off the real axis.
pub fn stable_series_re(alpha: f64, phase: f64, arg: SeriesArg) -> Result<SeriesSum> {
    series_escalating(alpha, phase, arg, Part::Real)
}
