//! Run one verification suite and print its JSON report.
//!
//!     cargo run --release --example verify_suite [-- SUITE]

use stable_hcm::verify::{run, Suite, VerifyOptions};

fn main() -> stable_hcm::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("small-z").parse()?;
    let report = run(suite, &VerifyOptions::default())?;
    println!("{}", report.to_json());
    std::process::exit(if report.pass { 0 } else { 1 });
}
