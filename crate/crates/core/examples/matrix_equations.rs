//! Octonion matrix equations solved through their real adjoint systems.

use octorep::omatrix::{mat_apply, MatrixEquation};
use octorep::random::{octonion_matrix, trial_rng};

fn main() {
    let mut rng = trial_rng(2024, 0);
    let a = octonion_matrix(&mut rng, 2, 2);
    let b = octonion_matrix(&mut rng, 2, 2);
    let x = octonion_matrix(&mut rng, 2, 2);

    let ax = mat_apply(&a, &x).expect("conformable");
    let outer = mat_apply(&ax, &b).expect("conformable");
    let inner = mat_apply(&a, &mat_apply(&x, &b).expect("conformable")).expect("conformable");
    let sylv = &ax - &mat_apply(&x, &b).expect("conformable");

    let cases = [
        ("AX = B", MatrixEquation::LeftMul { a: &a, rhs: &ax }),
        ("(AX)B = C", MatrixEquation::OuterProduct { a: &a, b: &b, rhs: &outer }),
        ("A(XB) = C", MatrixEquation::InnerProduct { a: &a, b: &b, rhs: &inner }),
        ("AX - XB = C", MatrixEquation::Sylvester { a: &a, b: &b, rhs: &sylv }),
    ];
    for (label, eq) in cases {
        let set = eq.solve().expect("conformable");
        let err = set.particular.as_ref().map(|p| p.max_entry_dist(&x)).unwrap_or(f64::NAN);
        println!(
            "{label:<12} solvable {} null-space dim {} residual {:.3e} |X - X*| {:.3e}",
            set.solvable,
            set.dimension(),
            set.residual,
            err
        );
    }
}
