//! Tabulate the boundary angle, save it, and classify its monotonicity.
//!
//!     cargo run --example theta_table [-- OUT_STEM]

use std::path::PathBuf;

use stable_hcm::thorin::{default_table, monotonicity};

fn main() -> stable_hcm::Result<()> {
    for alpha in [1.0 / 3.0, 0.4, 0.5, 0.6, 0.7] {
        let tab = default_table(alpha)?;
        let m = monotonicity(&tab);
        println!(
            "alpha = {alpha:.4}: theta(t_min) = {:.6}, theta(t_max) = {:.9}, {:?}",
            tab.theta[0],
            tab.theta[tab.len() - 1],
            m.verdict
        );
    }

    if let Some(stem) = std::env::args().nth(1) {
        let tab = default_table(0.4)?;
        tab.save(&PathBuf::from(&stem))?;
        println!("wrote {stem}.csv and {stem}.json");
    }
    Ok(())
}
