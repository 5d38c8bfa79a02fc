//! Rebuild G_α from its boundary angle and compare with direct evaluation.
//!
//!     cargo run --example stieltjes_representation

use stable_hcm::galpha::{GAlpha, Method, SlitPoint};
use stable_hcm::thorin::{
    calibrate_a, default_table, log_moment_target, reconstruct_with, theta_prime_form_with, ThetaPrime,
};

fn main() -> stable_hcm::Result<()> {
    let alpha = 0.4;
    let tab = default_table(alpha)?;
    let g = GAlpha::new(alpha)?;
    let a = calibrate_a(alpha, &tab)?;
    println!("calibrated amplitude a = {a:.12}");

    let tp = ThetaPrime::new(&tab)?;
    for (r, t) in [(0.1, 0.0), (1.5, 0.4), (8.0, -0.9), (20.0, 0.0)] {
        let p = SlitPoint::new(r, t)?;
        let direct = g.eval_complex(p, Method::Auto)?;
        let rebuilt = reconstruct_with(a, &tab, p);
        let by_derivative = theta_prime_form_with(alpha, &tp, p)?;
        println!(
            "r={r:<5} t={t:<5} rel err {:.2e} (angle) {:.2e} (angle derivative)",
            (rebuilt - direct).norm() / direct.norm(),
            (by_derivative - direct).norm() / direct.norm()
        );
    }

    println!("total variation {:.9} (expect {:.9})", tp.total_variation()?, 0.5 - alpha);
    println!("log-moment {:.9} (expect {:.9})", tp.log_moment()?, log_moment_target(alpha));
    Ok(())
}
