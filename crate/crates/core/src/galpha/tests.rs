use super::*;
use crate::numerics::log_grid;

// α = 1/2: G(z) = (2√π)^{-1} z^{-1/2} e^{-z/4}, principal branch
fn half_closed(z: Complex64) -> Complex64 {
    z.powf(-0.5) * (-z / 4.0).exp() / (2.0 * PI.sqrt())
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn half_at_four_on_the_positive_axis() {
    let g = GAlpha::new(0.5).unwrap();
    let expect = 0.25 * (-1.0f64).exp() / PI.sqrt();
    assert!((expect - 0.0518884).abs() < 1e-7);
    for m in [Method::Series, Method::Integral, Method::Ray, Method::Descent, Method::Auto] {
        let v = g.eval_complex(SlitPoint::positive(4.0).unwrap(), m).unwrap();
        assert!((v.re - expect).abs() < 1e-11 * expect, "{m:?}: {v}");
        assert!(v.im.abs() < 1e-12 * expect, "{m:?}: {v}");
    }
}

#[test]
fn half_matches_closed_form_off_the_axis() {
    let g = GAlpha::new(0.5).unwrap();
    for &(r, t) in &[(0.3, 0.2), (2.0, -0.4), (7.0, 0.6), (3.0, 0.95), (20.0, -0.8)] {
        let p = SlitPoint::new(r, t).unwrap();
        let expect = half_closed(p.z());
        for m in [Method::Series, Method::Integral, Method::Auto] {
            let v = g.eval_complex(p, m).unwrap();
            assert!(rel(v, expect) < 1e-9, "{m:?} at ({r}, {t}): {v} vs {expect}");
        }
    }
}

#[test]
fn conjugate_symmetry() {
    let g = GAlpha::new(0.4).unwrap();
    for m in [Method::Series, Method::Integral] {
        let a = g.eval_complex(SlitPoint::new(1.0, 0.25).unwrap(), m).unwrap();
        let b = g.eval_complex(SlitPoint::new(1.0, -0.25).unwrap(), m).unwrap();
        assert!((a - b.conj()).norm() < 1e-14 * a.norm());
    }
}

#[test]
fn series_and_quadrature_agree_off_the_axis() {
    let g = GAlpha::new(0.4).unwrap();
    let p = SlitPoint::new(2.0, 0.6).unwrap();
    let s = g.eval_complex(p, Method::Series).unwrap();
    let i = g.eval_complex(p, Method::Integral).unwrap();
    assert!(rel(s, i) < 1e-8, "{s} vs {i}");
}

#[test]
fn descent_and_ray_agree_in_the_right_half_plane() {
    let g = GAlpha::new(0.35).unwrap();
    for &(r, t) in &[(0.5, 0.0), (3.0, 0.3), (6.0, -0.45)] {
        let p = SlitPoint::new(r, t).unwrap();
        let a = g.eval_complex(p, Method::Descent).unwrap();
        let b = g.eval_complex(p, Method::Ray).unwrap();
        assert!(rel(a, b) < 1e-8, "({r}, {t}): {a} vs {b}");
    }
}

#[test]
fn path_function_starts_at_delta() {
    for a in [0.2, 0.4, 0.7] {
        let d = constants(a).delta;
        assert_eq!(kanter_u(a, 0.0), d);
        assert!((kanter_u(a, 1e-6) - d).abs() < 1e-9);
        assert!(kanter_u(a, 0.5) > d);
    }
}

#[test]
fn boundary_at_half_is_purely_imaginary() {
    let g = GAlpha::new(0.5).unwrap();
    let expect = -(1.0f64).exp() / (4.0 * PI.sqrt());
    for m in [Method::Series, Method::Integral, Method::Auto] {
        let v = g.boundary(CutPoint::upper(4.0).unwrap(), m).unwrap().to_complex().unwrap();
        assert!(v.re.abs() < 1e-12 * expect.abs(), "{m:?}: {v}");
        assert!((v.im - expect).abs() < 1e-10 * expect.abs(), "{m:?}: {v}");
    }
    let lower = g.boundary(CutPoint::new(4.0, Side::Lower).unwrap(), Method::Auto).unwrap();
    assert!((lower.to_complex().unwrap().im + expect).abs() < 1e-10 * expect.abs());
}

#[test]
fn boundary_series_and_quadrature_agree() {
    let g = GAlpha::new(0.4).unwrap();
    let q = CutPoint::upper(2.0).unwrap();
    let s = g.boundary(q, Method::Series).unwrap().value;
    let i = g.boundary(q, Method::Integral).unwrap().value;
    assert!(s.relative_distance(&i) < 1e-8);
}

#[test]
fn imaginary_part_is_negative_on_the_cut() {
    let g = GAlpha::new(0.4).unwrap();
    for r in log_grid(1e-3, 50.0, 40).unwrap() {
        let v = g.boundary(CutPoint::upper(r).unwrap(), Method::Auto).unwrap().value;
        assert_eq!(v.ln_abs_im().1, -1.0, "r = {r}");
    }
}

#[test]
fn approaching_the_cut_reaches_the_boundary() {
    // the gap closes linearly in the distance π r ε to the cut
    let g = GAlpha::new(0.4).unwrap();
    for r in [0.5, 3.0, 10.0] {
        let on = g.boundary(CutPoint::upper(r).unwrap(), Method::Auto).unwrap().value;
        let on_low = g.boundary(CutPoint::new(r, Side::Lower).unwrap(), Method::Auto).unwrap().value;
        let mut gaps = Vec::new();
        for eps in [1e-4, 1e-6] {
            let near = g.eval(SlitPoint::new(r, 1.0 - eps).unwrap(), Method::Auto).unwrap().value;
            let near_low = g.eval(SlitPoint::new(r, -1.0 + eps).unwrap(), Method::Auto).unwrap().value;
            let gap = near.relative_distance(&on);
            assert!((near_low.relative_distance(&on_low) - gap).abs() < 1e-9);
            assert!(gap < PI * eps * (1.0 + r), "r = {r}, ε = {eps}: {gap}");
            gaps.push(gap);
        }
        assert!(gaps[1] < 2e-2 * gaps[0]);
    }
}

#[test]
fn theta_is_one_half_at_half() {
    let g = GAlpha::new(0.5).unwrap();
    for r in log_grid(1e-3, 1e3, 25).unwrap() {
        let p = g.theta_at(r).unwrap();
        assert!((p.theta - 0.5).abs() < 1e-10, "r = {r}: {}", p.theta);
    }
}

#[test]
fn theta_endpoint_laws() {
    let g = GAlpha::new(0.4).unwrap();
    assert!((g.theta_at(1e-6).unwrap().theta - 0.4).abs() < 1e-3);
    assert!((g.theta_at(50.0).unwrap().theta - 0.5).abs() < 1e-3);
}

#[test]
fn constants_at_half() {
    let k = constants(0.5);
    assert_eq!(k.delta, 0.25);
    assert!((k.c_paper - 0.5f64.sqrt()).abs() < 1e-15);
    assert!((k.c_adopted - 1.0 / (2.0 * PI.sqrt())).abs() < 1e-15);
    for i in 1..10 {
        let a = i as f64 / 10.0;
        assert!(constants(a).delta > 0.0);
        assert!((constants(a).delta - constants(a + 1e-7).delta).abs() < 1e-5);
    }
}

#[test]
fn asymptotic_law_is_exact_at_half() {
    let g = GAlpha::new(0.5).unwrap();
    let p = SlitPoint::new(30.0, 0.3).unwrap();
    let a = g.eval_complex(p, Method::Asymptotic).unwrap();
    assert!(rel(a, half_closed(p.z())) < 1e-13);
}

#[test]
fn small_z_constant_at_half_and_sign() {
    assert!((small_z_constant(0.5) - 1.0 / (2.0 * PI.sqrt())).abs() < 1e-15);
    assert!(small_z_constant_printed(0.5).abs() < 1e-15);
    for i in 1..100 {
        assert!(small_z_constant(i as f64 / 100.0) > 0.0);
    }
    let g = GAlpha::new(0.4).unwrap();
    let x: f64 = 1e-5;
    let measured = x.powf(0.4) * g.positive(x).unwrap();
    assert!((measured / small_z_constant(0.4) - 1.0).abs() < 1e-3);
}

#[test]
fn from_g_at_half() {
    let v = from_g(0.5, 1.0, DensityMethod::Auto).unwrap();
    let expect = (-0.25f64).exp() / (2.0 * PI.sqrt());
    assert!((v - expect).abs() < 1e-12 * expect);
}

#[test]
fn g_and_density_round_trip() {
    let g = GAlpha::new(0.4).unwrap();
    let params = StableParams::positive(0.4).unwrap();
    for x in [0.5, 1.0, 2.0] {
        let back = g.to_g(x).unwrap();
        let d = density(params, x, DensityMethod::Integral).unwrap();
        assert!((back - d).abs() < 1e-9 * d, "x = {x}: {back} vs {d}");
        let there = from_g(0.4, x, DensityMethod::Integral).unwrap();
        assert!((there - g.positive(x).unwrap()).abs() < 1e-9 * there);
    }
}

#[test]
fn the_two_change_of_variables_are_inverse() {
    let a: f64 = 0.37;
    for x in [0.1f64, 1.0, 7.5] {
        let y = x.powf(-(1.0 - a) / a);
        let back = y.powf(-a / (1.0 - a));
        assert!((back - x).abs() < 1e-14 * x);
        // G(x) = x^{-1/α} g(y) and g(y) = y^{-1/(1-α)} G(x) need x^{-1/α} y^{-1/(1-α)} = 1
        let prod = x.powf(-1.0 / a) * y.powf(-1.0 / (1.0 - a));
        assert!((prod - 1.0).abs() < 1e-12);
    }
}

#[test]
fn r_asym_is_cached_and_finite() {
    let g = GAlpha::new(0.45).unwrap();
    let r1 = g.r_asym();
    assert!(r1.is_finite() && r1 >= 50.0);
    assert_eq!(r1, g.r_asym());
    let p = SlitPoint::positive(r1).unwrap();
    let a = g.eval(p, Method::Asymptotic).unwrap().value;
    let d = g.eval(p, Method::Descent).unwrap().value;
    assert!(a.relative_distance(&d) <= 1e-6);
}

#[test]
fn bad_points_are_rejected() {
    assert!(SlitPoint::new(0.0, 0.0).is_err());
    assert!(SlitPoint::new(1.0, 1.0).is_err());
    assert!(CutPoint::upper(-2.0).is_err());
    assert!(GAlpha::new(1.0).is_err());
    let g = GAlpha::new(0.4).unwrap();
    assert!(g.eval(SlitPoint::new(1.0, 0.7).unwrap(), Method::Descent).is_err());
}

#[test]
fn real_part_on_the_cut_at_one_third() {
    // with ρ = 1/α - 2 = 1 the real part on the cut is half the value on the
    // positive axis
    let g = GAlpha::new(1.0 / 3.0).unwrap();
    for r in [0.5, 5.0, 20.0, 50.0] {
        let re = g.boundary_re(r).unwrap();
        let pos = g.eval(SlitPoint::positive(r).unwrap(), Method::Descent).unwrap().value;
        let pos = pos.to_complex().unwrap().re;
        assert!((re / (0.5 * pos) - 1.0).abs() < 1e-8, "r = {r}: {re} vs {pos}");
    }
}

#[test]
fn real_part_matches_the_full_boundary_value() {
    let g = GAlpha::new(0.4).unwrap();
    for r in [0.01, 1.0, 8.0] {
        let full = g.boundary(CutPoint::upper(r).unwrap(), Method::Auto).unwrap().to_complex().unwrap();
        assert!((g.boundary_re(r).unwrap() - full.re).abs() < 1e-9 * full.re.abs());
    }
}
