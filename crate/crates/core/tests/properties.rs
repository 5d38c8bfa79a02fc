use num_complex::Complex64;
use proptest::prelude::*;

use stable_hcm::galpha::{GAlpha, Method, SlitPoint};
use stable_hcm::hcm::{
    eval_representation, hcm_check, offset_grid, semigroup_membership, transform_invert, Atom, CmConfig,
    HCMRepresentation,
};
use stable_hcm::numerics::alternating_differences;
use stable_hcm::stable::{density, DensityMethod, StableParams};

fn atoms() -> impl Strategy<Value = Vec<Atom>> {
    prop::collection::vec((1.0..20.0f64, 0.05..2.0f64).prop_map(|(t, w)| Atom { t, w }), 0..=5)
}

fn representation() -> impl Strategy<Value = HCMRepresentation> {
    (0.5..2.0f64, -2.0..3.0f64, 0.0..2.0f64, 0.0..2.0f64, atoms(), atoms()).prop_map(
        |(c, beta, a1, a2, mu1, mu2)| HCMRepresentation { c, beta, a1, a2, mu1, mu2 },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn g_alpha_is_conjugate_symmetric(a in 0.2..0.8f64, r in 0.05..30.0f64, t in 0.0..0.95f64) {
        let g = GAlpha::new(a).unwrap();
        let up = g.eval_complex(SlitPoint::new(r, t).unwrap(), Method::Auto).unwrap();
        let down = g.eval_complex(SlitPoint::new(r, -t).unwrap(), Method::Auto).unwrap();
        prop_assert!((up - down.conj()).norm() <= 1e-12 * up.norm());
    }

    #[test]
    fn g_alpha_is_positive_on_the_axis(a in 0.2..0.8f64, x in 0.01..100.0f64) {
        let g = GAlpha::new(a).unwrap();
        let v: Complex64 = g.eval_complex(SlitPoint::positive(x).unwrap(), Method::Auto).unwrap();
        prop_assert!(v.re > 0.0);
        prop_assert_eq!(v.im, 0.0);
    }

    #[test]
    fn density_methods_agree(a in 0.3..0.5f64, x in 0.1..50.0f64) {
        let p = StableParams::positive(a).unwrap();
        let s = density(p, x, DensityMethod::Series);
        let i = density(p, x, DensityMethod::Integral).unwrap();
        prop_assert!(i > 0.0);
        if let Ok(s) = s {
            prop_assert!((s - i).abs() <= 1e-8 * i, "series {} integral {}", s, i);
        }
    }

    #[test]
    fn representation_at_one(rep in representation()) {
        let v = eval_representation(&rep, 1.0).unwrap();
        prop_assert!((v - rep.c * (-rep.a1 - rep.a2).exp()).abs() <= 1e-14 * v);
    }

    #[test]
    fn inverting_twice_is_the_identity(rep in representation(), x in 0.01..100.0f64) {
        let h = |y: f64| eval_representation(&rep, y);
        let back = transform_invert(transform_invert(h));
        let (a, b) = (back(x).unwrap(), h(x).unwrap());
        prop_assert!((a - b).abs() <= 1e-12 * b);
    }

    #[test]
    fn representations_are_consistent(rep in representation()) {
        let h = |y: f64| eval_representation(&rep, y);
        let r = hcm_check(h, &[0.5, 2.0], &offset_grid(2.0, 50.0, 8), &CmConfig::default()).unwrap();
        prop_assert!(r.is_consistent(), "{:?}", r);
    }

    #[test]
    fn exponential_differences_are_nonnegative(x0 in 0.0..10.0f64, h in 0.01..2.0f64) {
        let samples: Vec<f64> = (0..=8).map(|j| (-(x0 + j as f64 * h)).exp()).collect();
        let d = alternating_differences(&samples, 8).unwrap();
        prop_assert!(d.iter().all(|v| *v >= -1e-15 * samples[0]));
    }

    #[test]
    fn semigroup_membership_matches_the_set(a in 0.0001..0.9999f64) {
        let inside = a <= 0.25 || (1.0 / 3.0..=0.5).contains(&a);
        match semigroup_membership(a) {
            Some(f) => {
                prop_assert!(inside);
                prop_assert!((f.iter().product::<f64>() - a).abs() <= 1e-12);
            }
            None => prop_assert!(!inside),
        }
    }
}
