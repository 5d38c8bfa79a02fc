//! Acceptance criteria. Each test writes one PASS/FAIL line to stderr
//! (outside the test harness capture) and then asserts the verdict.

use std::io::Write;
use std::time::{Duration, Instant};

use stable_hcm::verify::{run, Check, Suite, VerifyOptions};

fn with_alphas(alphas: &[f64]) -> VerifyOptions {
    VerifyOptions {
        alphas: Some(alphas.to_vec()),
        ..Default::default()
    }
}

fn report(id: u32, title: &str, checks: &[Check], elapsed: Duration, budget: Option<Duration>, notes: &[String]) {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let pass = failed.is_empty() && in_time && !checks.is_empty();
    let mut err = std::io::stderr().lock();
    let budget_note = budget.map_or(String::new(), |b| format!(", budget {:.0?}", b));
    writeln!(
        err,
        "[{}] criterion {id}: {title} ({} of {} checks, {:.2?}{budget_note})",
        if pass { "PASS" } else { "FAIL" },
        checks.len() - failed.len(),
        checks.len(),
        elapsed,
    )
    .unwrap();
    for c in &failed {
        writeln!(
            err,
            "       failed {} alpha={:?} measured={} expected={} tol={:?}",
            c.name, c.alpha, c.measured, c.expected, c.tolerance
        )
        .unwrap();
    }
    for n in notes {
        writeln!(err, "       note: {n}").unwrap();
    }
    assert!(in_time, "criterion {id} exceeded its time budget: {elapsed:?}");
    assert!(failed.is_empty(), "criterion {id} failed: {failed:#?}");
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

#[test]
fn criterion_1_exact_half() {
    let (r, dt) = timed(|| run(Suite::Asymptotics, &with_alphas(&[0.5])).unwrap());
    let checks: Vec<Check> = r
        .checks
        .into_iter()
        .filter(|c| c.name.starts_with("closed_form") || c.name == "theta_flat_on_cut")
        .collect();
    assert_eq!(checks.len(), 3);
    report(1, "exact alpha = 1/2 case", &checks, dt, Some(Duration::from_secs(10)), &[]);
}

#[test]
fn criterion_2_small_z_law() {
    let (r, dt) = timed(|| run(Suite::SmallZ, &with_alphas(&[0.35, 0.4, 0.45])).unwrap());
    let notes: Vec<String> = r
        .checks
        .iter()
        .filter(|c| c.name == "refutes_double_angle")
        .map(|c| format!("alpha={:?}: measured {} vs double-angle candidate {}", c.alpha, c.measured, c.expected))
        .collect();
    report(2, "small-z law", &r.checks, dt, None, &notes);
}

#[test]
fn criterion_3_asymptotic_law() {
    let (r, dt) = timed(|| run(Suite::Asymptotics, &with_alphas(&[0.35, 0.4, 0.45, 0.5])).unwrap());
    let checks: Vec<Check> = r
        .checks
        .into_iter()
        .filter(|c| c.name.starts_with("positive_") || c.name.starts_with("cut_"))
        .collect();
    assert_eq!(checks.len(), 24);
    report(3, "asymptotic law on the positive axis and the cut", &checks, dt, Some(Duration::from_secs(30)), &[]);
}

#[test]
fn criterion_4_cut_laws() {
    let (r, dt) = timed(|| run(Suite::CutLaws, &with_alphas(&[1.0 / 3.0, 0.35, 0.4, 0.45])).unwrap());
    let in_scope = |c: &Check| {
        let a = c.alpha.unwrap();
        match c.name.as_str() {
            "imaginary_part_negative" | "scaled_imaginary_increasing" => a != 1.0 / 3.0,
            "scaled_real_decreasing" => a != 0.35,
            "real_part_density_identity" => a == 0.4,
            _ => false,
        }
    };
    let notes: Vec<String> = r
        .checks
        .iter()
        .filter(|c| c.name == "real_part_half_density_identity")
        .map(|c| format!("alpha={:?}: with a factor 1/2 on the density the identity holds to {}", c.alpha, c.measured))
        .collect();
    let checks: Vec<Check> = r.checks.into_iter().filter(in_scope).collect();
    assert_eq!(checks.len(), 10);
    report(4, "laws on the cut", &checks, dt, None, &notes);
}

#[test]
fn criterion_5_representation() {
    let (r, dt) = timed(|| run(Suite::Representation, &with_alphas(&[1.0 / 3.0, 0.4, 0.5, 0.6])).unwrap());
    report(5, "reconstruction from the angle table", &r.checks, dt, None, &[]);
}

#[test]
fn criterion_6_theta() {
    let (r, dt) =
        timed(|| run(Suite::ThetaMonotone, &with_alphas(&[1.0 / 3.0, 0.4, 0.45, 0.5, 0.6, 0.7])).unwrap());
    let notes: Vec<String> = r
        .checks
        .iter()
        .filter(|c| c.name == "log_moment_unnormalized" && c.alpha == Some(0.4))
        .map(|c| format!("log-moment {} against bare sin(pi a)/pi = {}", c.measured, c.expected))
        .collect();
    report(6, "angle endpoints, monotonicity and moments", &r.checks, dt, None, &notes);
}

#[test]
fn criterion_7_hcm() {
    let (r, dt) = timed(|| run(Suite::Hcm, &with_alphas(&[1.0 / 3.0, 0.4, 0.45, 0.5, 0.6, 0.7])).unwrap());
    report(7, "hyperbolic complete monotonicity", &r.checks, dt, Some(Duration::from_secs(120)), &[]);
}

#[test]
fn criterion_8_subordination() {
    let (r, dt) = timed(|| run(Suite::Subordination, &VerifyOptions::default()).unwrap());
    let checks: Vec<Check> = r.checks.into_iter().filter(|c| c.name.starts_with("product_density")).collect();
    assert_eq!(checks.len(), 5);
    report(8, "product of stable variables", &checks, dt, None, &[]);
}

#[test]
fn criterion_9_semigroup() {
    let (r, dt) = timed(|| run(Suite::Semigroup, &VerifyOptions::default()).unwrap());
    report(9, "multiplicative semigroup membership", &r.checks, dt, None, &[]);
}
