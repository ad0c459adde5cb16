//! The Sylvester coefficient matrix δ(a, b) = ω(a) − ν(b): closed-form
//! determinant, characteristic polynomial and rank.

use octorep::orep::{delta, delta_char_poly, delta_det_closed};
use octorep::realmat::{char_poly, determinant, rank};
use octorep::Octonion;

fn main() {
    let a: Octonion = "0.5,1,-2,0,0,1,0,0".parse().expect("valid literal");
    let b: Octonion = "1,0,0,1,1,0,-1,0".parse().expect("valid literal");
    let (factored, expanded) = delta_det_closed(a, b);
    println!("det delta direct   = {:.12e}", determinant(&delta(a, b)).expect("square"));
    println!("det delta factored = {factored:.12e}");
    println!("det delta expanded = {expanded:.12e}");

    let gap = delta_char_poly(a, b).max_rel_diff(&char_poly(&delta(a, b)).expect("square"));
    println!("char poly closed form vs Faddeev-LeVerrier: {gap:e}");

    let e = Octonion::basis;
    println!("rank delta(e1, e2) = {}", rank(&delta(e(1), e(2))));
    println!("rank delta(e1, e1) = {}", rank(&delta(e(1), e(1))));
}
