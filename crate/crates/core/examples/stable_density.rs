//! Positive stable densities by every evaluator, checked against the
//! closed form at α = 1/2.
//!
//!     cargo run --example stable_density

use stable_hcm::stable::{density, levy_density, mass, DensityMethod, StableParams};
use stable_hcm::numerics::QuadConfig;

fn main() -> stable_hcm::Result<()> {
    let half = StableParams::positive(0.5)?;
    println!("{:>8} {:>22} {:>22} {:>22}", "x", "closed form", "series", "integral");
    for x in [0.05, 0.3, 1.0, 4.0, 25.0] {
        println!(
            "{x:>8} {:>22.15e} {:>22.15e} {:>22.15e}",
            levy_density(x),
            density(half, x, DensityMethod::Series)?,
            density(half, x, DensityMethod::Integral)?,
        );
    }

    let p = StableParams::positive(0.4)?;
    println!("\nalpha = 0.4");
    for x in [0.1, 1.0, 10.0] {
        println!(
            "  g({x}) = {:.12e}  (kanter {:.12e})",
            density(p, x, DensityMethod::Auto)?,
            density(p, x, DensityMethod::Kanter)?
        );
    }
    println!("  mass = {:.9}", mass(p, &QuadConfig::default())?);

    let skew = StableParams::new(0.4, 0.5)?;
    println!("alpha = 0.4, rho = 0.5: g(10) = {:.12e}", density(skew, 10.0, DensityMethod::Auto)?);
    Ok(())
}
