//! Linear equations in one octonion unknown.

use octorep::olinsolve::{solve_assoc, solve_conj, solve_sim, solve_sylvester, AssocForm, SolutionSet};
use octorep::Octonion;

fn show(label: &str, set: &SolutionSet<Octonion>) {
    println!("{label}: solvable {}, null-space dim {}, residual {:e}", set.solvable, set.dimension(), set.residual);
    if let Some(x) = set.particular {
        println!("    particular {x}");
    }
}

fn main() {
    let e = Octonion::basis;
    show("e1 x = x e2", &solve_sim(e(1), e(2)).expect("valid input"));
    show("e1 x - x conj(e1) = e2", &solve_conj(e(1), e(2)).expect("non-real a"));

    let a: Octonion = "1,2,0,0,-1,0,0,1".parse().expect("valid literal");
    let b: Octonion = "0,0,1,1,0,2,0,0".parse().expect("valid literal");
    let x: Octonion = "3,0,0,-1,0,0,2,0".parse().expect("valid literal");
    show("a x - x b = c", &solve_sylvester(a, b, a * x - x * b).expect("valid input"));
    let c = AssocForm::Left.apply(a, b, x);
    show("(ab)x - a(bx) = c", &solve_assoc(AssocForm::Left, a, b, c).expect("valid input"));
}
