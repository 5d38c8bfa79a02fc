//! Numerical evidence for hyperbolic complete monotonicity.
//!
//!     cargo run --release --example hcm_check

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stable_hcm::galpha::GAlpha;
use stable_hcm::hcm::{eval_representation, hcm_check_default, transform_power, CMReport};
use stable_hcm::verify::random_representation;

fn show(name: &str, r: &CMReport) {
    println!("{name:<34} {:?}  max violation {:.3e}", r.verdict, r.max_violation);
}

fn main() -> stable_hcm::Result<()> {
    show("gamma kernel", &hcm_check_default(|x: f64| Ok(x.powf(1.5) * (-x).exp()))?);
    show("exp(-x^2)", &hcm_check_default(|x: f64| Ok((-x * x).exp()))?);
    show("(2 - sin log x) exp(-x)", &hcm_check_default(|x: f64| Ok((2.0 - x.ln().sin()) * (-x).exp()))?);

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let rep = random_representation(&mut rng);
    let h = |x: f64| eval_representation(&rep, x);
    show("random representation", &hcm_check_default(h)?);
    show("  composed with x^0.5", &hcm_check_default(transform_power(h, 0.5)?)?);

    for alpha in [0.4, 0.5, 0.7] {
        let g = GAlpha::new(alpha)?;
        show(&format!("G_alpha, alpha = {alpha}"), &hcm_check_default(|x| g.positive(x))?);
        let d = g.constants().delta;
        show(
            &format!("exp(-delta x)/G_alpha, alpha = {alpha}"),
            &hcm_check_default(|x: f64| Ok((-d * x).exp() / g.positive(x)?))?,
        );
    }
    let r = hcm_check_default(|x: f64| Ok((-x * x).exp()))?;
    println!("\n{}", r.to_json());
    Ok(())
}
