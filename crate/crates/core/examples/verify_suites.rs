//! Runs every invariant suite at a small trial count and prints the report.

use octorep::verify::{Suite, VerifyConfig};

fn main() {
    let cfg = VerifyConfig { trials: 20, seed: 0, tol: None };
    for suite in Suite::ALL {
        let report = suite.run(&cfg).expect("suites accept positive trial counts");
        print!("{}", report.render());
    }
}
