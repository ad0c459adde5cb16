//! Left and right representations of an octonion and their determinants.

use octorep::orep::{nu, o_vec, omega};
use octorep::realmat::determinant;
use octorep::Octonion;

fn main() {
    let a: Octonion = "1,1,0,0,0,0,0,0".parse().expect("valid literal");
    let x: Octonion = "0,2,-1,0,1,0,0,3".parse().expect("valid literal");
    println!("omega(1 + e1) =\n{:?}", omega(a));
    println!("det omega(1 + e1) = {}", determinant(&omega(a)).expect("square"));
    println!("|1 + e1|^8 = {}", a.norm().powi(8));

    let left = omega(a).mat_vec(&o_vec(x)).expect("8x8 times 8");
    let right = nu(a).mat_vec(&o_vec(x)).expect("8x8 times 8");
    println!("vec(ax) = {:?}\nomega(a)vec(x) = {:?}", o_vec(a * x).as_slice(), left.as_slice());
    println!("vec(xa) = {:?}\nnu(a)vec(x) = {:?}", o_vec(x * a).as_slice(), right.as_slice());
}
