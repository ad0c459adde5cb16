//! Left- and right-nested Cayley–Hamilton residuals for m = 1, 2, 3.

use octorep::omatrix::cayley_hamilton_residuals;
use octorep::random::{trial_rng, unit_entry_matrix};

fn main() {
    for m in 1..=3 {
        let a = unit_entry_matrix(&mut trial_rng(99, m as u64), m, m);
        let ch = cayley_hamilton_residuals(&a).expect("m <= 3");
        println!(
            "m = {m}: degree {}, sum|r_i| = {:.3e}, left {:.3e}, right {:.3e}",
            ch.poly.degree(),
            ch.coeff_scale,
            ch.left / ch.coeff_scale,
            ch.right / ch.coeff_scale
        );
    }
}
