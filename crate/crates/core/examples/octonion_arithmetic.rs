//! Products, conjugates, inverses and the associator on concrete octonions.

use octorep::{associator, Octonion};

fn main() {
    let e = Octonion::basis;
    println!("e1 * e2 = {}", e(1) * e(2));
    println!("e2 * e1 = {}", e(2) * e(1));

    let a: Octonion = "1,2,0,-1,0.5,0,3,0".parse().expect("valid literal");
    let b: Octonion = "0,1,1,0,0,-2,0,1".parse().expect("valid literal");
    println!("a = {a}\nb = {b}");
    println!("|ab| = {:.12}, |a||b| = {:.12}", (a * b).norm(), a.norm() * b.norm());
    println!("a * a^-1 = {}", a * a.inv().expect("a is nonzero"));

    let x = e(4) + e(7);
    println!("(a, b, x) = {}", associator(a, b, x));
    println!("(a, a, x) = {}  (alternative law)", associator(a, a, x));
}
