//! Which indices factor into indices from [1/3, 1/2].
//!
//!     cargo run --example semigroup

use stable_hcm::hcm::semigroup_membership;

fn main() {
    for alpha in [0.05, 0.1, 0.2, 0.25, 0.3, 1.0 / 3.0, 0.45, 0.5, 0.6] {
        match semigroup_membership(alpha) {
            Some(f) => println!("{alpha:.4} = {} x {:.6}", f.len(), f[0]),
            None => println!("{alpha:.4} is not generated"),
        }
    }
}
