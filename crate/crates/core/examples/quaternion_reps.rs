//! The two 4x4 real representations of quaternions and the sandwich formula.

use octorep::Quaternion;

fn main() {
    let a = Quaternion::new(1.0, 2.0, -1.0, 0.5);
    let b = Quaternion::new(0.0, 1.0, 3.0, -2.0);
    let x = Quaternion::new(2.0, 0.0, 1.0, 1.0);

    println!("phi(a) =\n{:?}", a.phi());
    println!("tau(b) =\n{:?}", b.tau());

    let direct = (a * x * b).to_vec();
    let via_reps = (&a.phi() * &b.tau()).mat_vec(&x.to_vec()).expect("4x4 times 4");
    println!("vec(a x b)          = {:?}", direct.as_slice());
    println!("phi(a) tau(b) vec x = {:?}", via_reps.as_slice());
    println!(
        "unitary similarity defect = {:e}",
        octorep::quaternion::diagonal_similarity_defect(a)
    );
}
