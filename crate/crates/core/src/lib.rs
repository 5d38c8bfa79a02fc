//! Positive stable densities, the slit-plane function G_α, its boundary angle
//! θ, the exponential Stieltjes representation built from θ, and a numerical
//! checker for (hyperbolic) complete monotonicity.

// `!(x > 0.0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision)]

pub mod cli;
pub mod error;
pub mod galpha;
pub mod hcm;
pub mod numerics;
pub mod series;
pub mod stable;
pub mod thorin;
pub mod verify;

pub use error::{Error, Result};
