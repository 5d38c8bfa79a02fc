//! G_α across the slit plane, on both sides of the cut, and its constants.
//!
//!     cargo run --example g_alpha

use stable_hcm::galpha::{CutPoint, GAlpha, Method, Side, SlitPoint};

fn main() -> stable_hcm::Result<()> {
    let g = GAlpha::new(0.4)?;
    let k = g.constants();
    println!("alpha = 0.4: delta = {:.12}, c = {:.12}", k.delta, k.c_adopted);

    for (r, t) in [(0.5, 0.0), (2.0, 0.3), (2.0, 0.8), (40.0, 0.1), (300.0, 0.0)] {
        let v = g.eval(SlitPoint::new(r, t)?, Method::Auto)?;
        println!(
            "G(r={r}, t={t}) = exp({:.10}) e^(i pi {:+.10})  [{:?}]",
            v.value.log_mod, v.value.phase_over_pi, v.method
        );
    }

    for side in [Side::Upper, Side::Lower] {
        let b = g.boundary(CutPoint::new(2.0, side)?, Method::Auto)?.to_complex()?;
        println!("G(-2 {side:?}) = {b:.12}");
    }
    let p = g.theta_at(2.0)?;
    println!("polar form at r = 2: R = {:.12}, theta = {:.12}", p.modulus(), p.theta);

    // large arguments stay in log form
    let far = g.eval(SlitPoint::new(5000.0, 0.0)?, Method::Descent)?;
    let asym = g.asymptotic(SlitPoint::positive(5000.0)?);
    println!("log G(5000) = {:.12} (asymptotic {:.12})", far.value.log_mod, asym.log_mod);
    Ok(())
}
