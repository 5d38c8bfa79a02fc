use crate::error::{Error, Result};

/// `n` geometrically spaced nodes from `t_min` to `t_max`, endpoints exact.
pub fn log_grid(t_min: f64, t_max: f64, n: usize) -> Result<Vec<f64>> {
    if !(t_min > 0.0 && t_max > t_min && t_max.is_finite()) {
        return Err(Error::BadRange(format!(
            "log grid needs 0 < t_min < t_max, got [{t_min}, {t_max}]"
        )));
    }
    if n < 2 {
        return Err(Error::GridTooSmall { needed: 2, got: n });
    }
    let (l0, l1) = (t_min.ln(), t_max.ln());
    let step = (l1 - l0) / (n - 1) as f64;
    let mut grid: Vec<f64> = (0..n).map(|i| (l0 + step * i as f64).exp()).collect();
    grid[0] = t_min;
    grid[n - 1] = t_max;
    Ok(grid)
}

/// `n` equally spaced nodes from `a` to `b`.
pub fn lin_grid(a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    if !(b > a) {
        return Err(Error::BadRange(format!("need a < b, got [{a}, {b}]")));
    }
    if n < 2 {
        return Err(Error::GridTooSmall { needed: 2, got: n });
    }
    let step = (b - a) / (n - 1) as f64;
    let mut grid: Vec<f64> = (0..n).map(|i| a + step * i as f64).collect();
    grid[n - 1] = b;
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_point_grid_has_geometric_middle() {
        let g = log_grid(1.0, 100.0, 3).unwrap();
        assert_eq!(g[0], 1.0);
        assert!((g[1] - 10.0).abs() < 1e-12);
        assert_eq!(g[2], 100.0);
    }

    #[test]
    fn degenerate_range_is_rejected() {
        assert!(matches!(log_grid(1.0, 1.0, 2), Err(Error::BadRange(_))));
        assert!(matches!(log_grid(0.0, 1.0, 2), Err(Error::BadRange(_))));
        assert!(log_grid(1.0, 2.0, 1).is_err());
    }

    #[test]
    fn decade_grid_has_ratio_ten() {
        let g = log_grid(1e-4, 1e4, 9).unwrap();
        for w in g.windows(2) {
            assert!((w[1] / w[0] - 10.0).abs() < 1e-12);
        }
    }
}
