//! Finite-difference ladders and sampled derivatives.

use crate::error::{Error, Result};

/// `(-1)^k Δ_h^k f(x₀)` for `k = 0..=order`, from equally spaced samples
/// `f(x₀), f(x₀+h), …`.
///
/// Each order is built from the previous one by repeated differencing,
/// which keeps every intermediate on the scale of the samples instead of
/// forming large binomial sums.
pub fn alternating_differences(samples: &[f64], order: usize) -> Result<Vec<f64>> {
    if samples.len() < order + 1 {
        return Err(Error::GridTooSmall {
            needed: order + 1,
            got: samples.len(),
        });
    }
    let mut row: Vec<f64> = samples[..=order].to_vec();
    let mut out = Vec::with_capacity(order + 1);
    out.push(row[0]);
    for k in 1..=order {
        // f_j - f_{j+1} is -Δ, so k passes give (-Δ)^k
        for j in 0..row.len() - 1 {
            row[j] -= row[j + 1];
        }
        row.pop();
        out.push(row[0]);
        debug_assert_eq!(row.len(), order + 1 - k);
    }
    Ok(out)
}

/// Derivative of a sampled function on a strictly increasing grid.
///
/// Interior nodes use the three-point nonuniform central formula, which is
/// exact for quadratics; the two end nodes use the three-point one-sided
/// formula of the same order.
pub fn central_derivative(grid: &[f64], values: &[f64]) -> Result<Vec<f64>> {
    let n = grid.len();
    if n < 3 {
        return Err(Error::GridTooSmall { needed: 3, got: n });
    }
    if values.len() != n {
        return Err(Error::BadRange(format!(
            "grid has {n} nodes but {} values",
            values.len()
        )));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::BadRange("grid must be strictly increasing".into()));
    }

    let mut d = vec![0.0; n];
    for i in 1..n - 1 {
        let h0 = grid[i] - grid[i - 1];
        let h1 = grid[i + 1] - grid[i];
        d[i] = (-h1 / (h0 * (h0 + h1))) * values[i - 1]
            + ((h1 - h0) / (h0 * h1)) * values[i]
            + (h0 / (h1 * (h0 + h1))) * values[i + 1];
    }
    d[0] = one_sided(grid[0], grid[1], grid[2], values[0], values[1], values[2]);
    d[n - 1] = one_sided(
        grid[n - 1],
        grid[n - 2],
        grid[n - 3],
        values[n - 1],
        values[n - 2],
        values[n - 3],
    );
    Ok(d)
}

// Derivative at x0 of the quadratic through (x0,y0), (x1,y1), (x2,y2).
fn one_sided(x0: f64, x1: f64, x2: f64, y0: f64, y1: f64, y2: f64) -> f64 {
    let a = x1 - x0;
    let b = x2 - x0;
    y0 * (-(a + b) / (a * b)) + y1 * (b / (a * (b - a))) + y2 * (-a / (b * (b - a)))
}
