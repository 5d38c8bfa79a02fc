use std::f64::consts::PI;

/// `sin(πx)`, with the argument reduced before scaling so that values near
/// the zeros keep full relative accuracy. Exact at integers and
/// half-integers.
pub fn sin_pi(x: f64) -> f64 {
    // y in (-1, 1]; fmod and the ±2 shifts below are exact
    let mut y = x % 2.0;
    if y > 1.0 {
        y -= 2.0;
    } else if y <= -1.0 {
        y += 2.0;
    }
    if y == 0.0 || y == 1.0 {
        return 0.0;
    }
    if y == 0.5 {
        return 1.0;
    }
    if y == -0.5 {
        return -1.0;
    }
    // reflect into [-1/2, 1/2]: sin(π(1-y)) = sin(πy)
    let reduced = if y > 0.5 {
        1.0 - y
    } else if y < -0.5 {
        -1.0 - y
    } else {
        y
    };
    (PI * reduced).sin()
}

/// `cos(πx)`, exact at integers and half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_values_are_exact() {
        assert_eq!(sin_pi(3.0), 0.0);
        assert_eq!(sin_pi(-2.0), 0.0);
        assert_eq!(sin_pi(0.5), 1.0);
        assert_eq!(sin_pi(7.5), -1.0);
        assert_eq!(cos_pi(2.0), 1.0);
        assert_eq!(cos_pi(1.0), -1.0);
        assert_eq!(cos_pi(0.5), 0.0);
    }

    #[test]
    fn agrees_with_naive_away_from_zeros() {
        for k in 0..200 {
            let x = -3.0 + 0.0371 * k as f64;
            assert!((sin_pi(x) - (PI * x).sin()).abs() < 1e-14);
            assert!((cos_pi(x) - (PI * x).cos()).abs() < 1e-14);
        }
    }

    #[test]
    fn keeps_relative_accuracy_near_one() {
        let x = 1.0 - 1e-9;
        let d = 1.0 - x; // exact
        assert!((sin_pi(x) / (PI * d).sin() - 1.0).abs() < 1e-14);
    }
}
