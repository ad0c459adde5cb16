//! Inverse operators built from the characteristic polynomial of ω(A).

use octorep::omatrix::{left_inverse, mat_apply, right_inverse, InverseOperator, OctonionMatrix, OperatorSide};
use octorep::random::{octonion_matrix, trial_rng, unit_entry_matrix};

fn main() {
    let mut rng = trial_rng(7, 0);
    let a = unit_entry_matrix(&mut rng, 2, 2);
    let b = octonion_matrix(&mut rng, 2, 3);
    let id = OctonionMatrix::identity(2);

    let l = InverseOperator::new(OperatorSide::LeftOp, &a).expect("completely invertible");
    println!("char poly of omega(A) has degree {}", l.poly().degree());
    let x = l.apply(&b).expect("conformable");
    println!("|A (L^-1 B) - B| = {:e}", mat_apply(&a, &x).expect("conformable").max_entry_dist(&b));
    let raw = l.apply_polynomial(&b).expect("conformable");
    println!("uncorrected polynomial: {:e}", mat_apply(&a, &raw).expect("conformable").max_entry_dist(&b));

    let li = left_inverse(&a).expect("completely invertible");
    let ri = right_inverse(&a).expect("completely invertible");
    println!("|XA - I| = {:e}", mat_apply(&li, &a).expect("conformable").max_entry_dist(&id));
    println!("|AY - I| = {:e}", mat_apply(&a, &ri).expect("conformable").max_entry_dist(&id));
}
