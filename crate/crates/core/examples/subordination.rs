//! Products of independent stable variables: X Y² with X, Y of index 1/2
//! has index 1/4.
//!
//!     cargo run --release --example subordination

use stable_hcm::numerics::QuadConfig;
use stable_hcm::stable::{
    density, mult_convolution, pushforward_power, subordination_mixture, subordination_scale, DensityMethod,
    StableParams,
};

fn main() -> stable_hcm::Result<()> {
    let half = StableParams::positive(0.5)?;
    let quarter = StableParams::positive(0.25)?;
    let cfg = QuadConfig::default().with_rel_tol(1e-12);
    let f = |y: f64| density(half, y, DensityMethod::Auto);
    let squared = |y: f64| pushforward_power(f, 2.0, y);
    for x in [0.25, 1.0, 4.0] {
        let product = mult_convolution(f, squared, x, &cfg)?;
        let direct = density(quarter, x, DensityMethod::Auto)?;
        println!("x = {x}: product {product:.14e}, index 1/4 {direct:.14e}");
    }

    let alpha = 0.4;
    let s = subordination_scale(alpha);
    let target = StableParams::positive(alpha)?;
    for x in [0.5, 2.0] {
        let mix = subordination_mixture(2.0 * alpha, 1.0, x, &cfg)?;
        let rescaled = density(target, x / s, DensityMethod::Auto)? / s;
        println!("mixture at {x}: {mix:.12e} vs rescaled density {rescaled:.12e}");
    }
    Ok(())
}
