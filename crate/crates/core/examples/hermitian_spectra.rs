//! Real spectra of Hermitian octonion matrices and the multiplicity census.

use octorep::oeigen::{hermitian_eigen, multiplicity_census, two_by_two_char_poly_gap};
use octorep::random::{hermitian, trial_rng};

fn main() {
    for m in [2, 3] {
        let a = hermitian(&mut trial_rng(3, 0), m);
        let r = hermitian_eigen(&a, None).expect("Hermitian");
        println!("m = {m}: {} ; max residual {:e}", r.summary(), r.max_residual);
        if m == 2 {
            println!("  char poly gap to [(l-a)(l-c)-|b|^2]^8: {:e}", two_by_two_char_poly_gap(&a).expect("2x2"));
        }
    }
    for m in [4, 5] {
        let census = multiplicity_census(m, 10, 3).expect("2 <= m <= 6");
        println!("m = {m} census over {} trials: {:?}", census.trials(), census.frequencies);
    }
}
