//! Shared numerical substrate: quadrature, difference ladders, grids and
//! log-domain complex values.

pub mod diff;
pub mod grid;
pub mod logcomplex;
pub mod quad;
pub mod trig;

pub use diff::{alternating_differences, central_derivative};
pub use grid::{lin_grid, log_grid};
pub use logcomplex::LogComplex;
pub use trig::{cos_pi, sin_pi};
pub use quad::{
    integrate_half_line, integrate_half_line_real, integrate_interval, integrate_interval_real,
    integrate_real_line,
    integrate_with_breaks, QuadConfig, QuadResult,
};
