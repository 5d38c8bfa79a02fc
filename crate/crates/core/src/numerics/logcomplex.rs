use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest log-modulus that still converts to a finite `f64` with margin.
pub const MAX_PLAIN_LOG_MOD: f64 = 700.0;

/// A complex number stored as `exp(log_mod) · exp(iπ · phase_over_pi)`.
///
/// Boundary values of G_α on the cut grow like `e^{δr}`; keeping the
/// modulus in log form lets tables reach `r = 10⁴` and beyond.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogComplex {
    pub log_mod: f64,
    pub phase_over_pi: f64,
}

/// Reduce a phase (in units of π) into `(-1, 1]`.
pub fn wrap_phase(p: f64) -> f64 {
    let mut q = p % 2.0;
    if q <= -1.0 {
        q += 2.0;
    } else if q > 1.0 {
        q -= 2.0;
    }
    q
}

impl LogComplex {
    pub const ZERO: LogComplex = LogComplex {
        log_mod: f64::NEG_INFINITY,
        phase_over_pi: 0.0,
    };

    pub fn new(log_mod: f64, phase_over_pi: f64) -> Self {
        LogComplex {
            log_mod,
            phase_over_pi: wrap_phase(phase_over_pi),
        }
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z.re == 0.0 && z.im == 0.0 {
            return Self::ZERO;
        }
        Self::new(z.norm().ln(), z.arg() / PI)
    }

    /// `z · e^{shift}` without forming `e^{shift}`.
    pub fn from_scaled(z: Complex64, shift: f64) -> Self {
        let mut v = Self::from_complex(z);
        v.log_mod += shift;
        v
    }

    /// Plain complex value; fails when the modulus would overflow.
    pub fn to_complex(&self) -> Result<Complex64> {
        if self.log_mod > MAX_PLAIN_LOG_MOD {
            return Err(Error::OverflowRisk {
                log_mod: self.log_mod,
            });
        }
        Ok(Complex64::from_polar(self.log_mod.exp(), PI * self.phase_over_pi))
    }

    /// Value divided by `e^{shift}`, as a plain complex.
    pub fn scaled_down(&self, shift: f64) -> Complex64 {
        Complex64::from_polar((self.log_mod - shift).exp(), PI * self.phase_over_pi)
    }

    /// Principal logarithm, `log_mod + iπ·phase_over_pi`.
    pub fn ln(&self) -> Complex64 {
        Complex64::new(self.log_mod, PI * self.phase_over_pi)
    }

    pub fn exp_of(w: Complex64) -> Self {
        Self::new(w.re, w.im / PI)
    }

    pub fn conj(&self) -> Self {
        if self.phase_over_pi == 1.0 {
            return *self;
        }
        LogComplex {
            log_mod: self.log_mod,
            phase_over_pi: -self.phase_over_pi,
        }
    }

    pub fn modulus(&self) -> f64 {
        self.log_mod.exp()
    }

    pub fn is_zero(&self) -> bool {
        self.log_mod == f64::NEG_INFINITY
    }

    /// `log |Re|`, with the sign of the real part; `(-inf, 0)` when zero.
    pub fn ln_abs_re(&self) -> (f64, f64) {
        let c = (PI * self.phase_over_pi).cos();
        if c == 0.0 || self.is_zero() {
            return (f64::NEG_INFINITY, 0.0);
        }
        (self.log_mod + c.abs().ln(), c.signum())
    }

    /// `log |Im|`, with the sign of the imaginary part.
    pub fn ln_abs_im(&self) -> (f64, f64) {
        let s = (PI * self.phase_over_pi).sin();
        if s == 0.0 || self.is_zero() {
            return (f64::NEG_INFINITY, 0.0);
        }
        (self.log_mod + s.abs().ln(), s.signum())
    }

    /// Relative distance `|a - b| / |b|`, computed on a common scale.
    pub fn relative_distance(&self, other: &LogComplex) -> f64 {
        let shift = other.log_mod;
        let a = self.scaled_down(shift);
        let b = other.scaled_down(shift);
        (a - b).norm() / b.norm()
    }

    pub fn powf(&self, p: f64) -> Self {
        Self::new(self.log_mod * p, self.phase_over_pi * p)
    }
}

impl Mul for LogComplex {
    type Output = LogComplex;
    fn mul(self, rhs: LogComplex) -> LogComplex {
        LogComplex::new(self.log_mod + rhs.log_mod, self.phase_over_pi + rhs.phase_over_pi)
    }
}

impl Div for LogComplex {
    type Output = LogComplex;
    fn div(self, rhs: LogComplex) -> LogComplex {
        LogComplex::new(self.log_mod - rhs.log_mod, self.phase_over_pi - rhs.phase_over_pi)
    }
}

impl Add for LogComplex {
    type Output = LogComplex;
    fn add(self, rhs: LogComplex) -> LogComplex {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let shift = self.log_mod.max(rhs.log_mod);
        LogComplex::from_scaled(self.scaled_down(shift) + rhs.scaled_down(shift), shift)
    }
}

impl Neg for LogComplex {
    type Output = LogComplex;
    fn neg(self) -> LogComplex {
        LogComplex::new(self.log_mod, self.phase_over_pi + 1.0)
    }
}

impl Sub for LogComplex {
    type Output = LogComplex;
    fn sub(self, rhs: LogComplex) -> LogComplex {
        self + (-rhs)
    }
}

impl fmt::Display for LogComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp({}) * exp(i*pi*{})", self.log_mod, self.phase_over_pi)
    }
}
