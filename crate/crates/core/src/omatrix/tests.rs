use super::*;
use crate::octonion::Octonion;
use crate::random::{octonion, octonion_matrix, trial_rng};

fn e(i: usize) -> Octonion {
    Octonion::basis(i)
}

fn shapes(seed: u64, trials: u64) -> impl Iterator<Item = (rand_chacha::ChaCha8Rng, usize, usize, usize, usize)> {
    (0..trials).map(move |t| {
        let mut rng = trial_rng(seed, t);
        use rand::Rng;
        let dims: [usize; 4] = std::array::from_fn(|_| rng.random_range(1..=3));
        (rng, dims[0], dims[1], dims[2], dims[3])
    })
}

fn close(x: &RealVector, y: &RealVector, tol: f64) -> bool {
    x.max_abs_diff(y) <= tol * (1.0 + x.norm_inf().max(y.norm_inf()))
}

fn unit_scaled(rng: &mut rand_chacha::ChaCha8Rng, m: usize) -> OctonionMatrix {
    crate::random::unit_entry_matrix(rng, m, m)
}

#[test]
fn adjoints_of_identity() {
    for m in 1..4 {
        let id = OctonionMatrix::identity(m);
        assert_eq!(id.left_adjoint(), RealMatrix::identity(8 * m));
        assert_eq!(id.right_adjoint(), RealMatrix::identity(8 * m));
    }
}

#[test]
fn adjoint_algebra() {
    for (mut rng, m, n, _, _) in shapes(1, 100) {
        let a = octonion_matrix(&mut rng, m, n);
        let b = octonion_matrix(&mut rng, m, n);
        assert_eq!(a.conj_transpose().left_adjoint(), a.left_adjoint().transpose());
        let k = &(&OctonionMatrix::k_block(n) * &a.left_adjoint().transpose()) * &OctonionMatrix::k_block(m);
        assert_eq!(a.right_adjoint(), k);
        assert_eq!(a.scale(2.0).right_adjoint(), a.right_adjoint().scale(2.0));
        assert_eq!(a.scale(2.0).left_adjoint(), a.left_adjoint().scale(2.0));
        let sum = &a + &b;
        assert!(sum.left_adjoint().max_abs_diff(&(&a.left_adjoint() + &b.left_adjoint())) < 1e-15);
        assert!(sum.right_adjoint().max_abs_diff(&(&a.right_adjoint() + &b.right_adjoint())) < 1e-15);
    }
}

#[test]
fn reconstruction_from_left_adjoint() {
    let a = octonion_matrix(&mut trial_rng(2, 0), 2, 3);
    let back = OctonionMatrix::from_left_adjoint(&a.left_adjoint()).unwrap();
    assert!(back.max_entry_dist(&a) < 1e-14);
}

#[test]
fn vec_layout() {
    assert_eq!(OctonionMatrix::scalar(e(1)).vec(), RealVector::unit(8, 1));
    let a = OctonionMatrix::from_fn(2, 2, |r, c| e(2 * c + r));
    // column-major: a11, a21, a12, a22
    let v = a.vec();
    for (k, i) in [0, 1, 2, 3].into_iter().enumerate() {
        assert_eq!(v.as_slice()[8 * k + i], 1.0);
    }
    assert_eq!(OctonionMatrix::unvec(2, 2, &v).unwrap(), a);
    assert!(OctonionMatrix::unvec(2, 3, &v).is_err());
}

#[test]
fn vec_of_column_and_row_products() {
    for (mut rng, n, _, _, _) in shapes(3, 200) {
        let a = octonion_matrix(&mut rng, n, 1);
        let b = octonion_matrix(&mut rng, 1, n);
        let x = octonion(&mut rng);
        let xm = OctonionMatrix::scalar(x);
        let ax = mat_apply(&a, &xm).unwrap().vec();
        assert!(close(&ax, &a.left_adjoint().mat_vec(&xm.vec()).unwrap(), 1e-12));
        let xb = mat_apply(&xm, &b).unwrap().vec();
        assert!(close(&xb, &b.right_adjoint().mat_vec(&xm.vec()).unwrap(), 1e-12));
    }
}

#[test]
fn vec_identities_with_kronecker_blocks() {
    for (mut rng, m, n, p, q) in shapes(4, 300) {
        let a = octonion_matrix(&mut rng, m, n);
        let x = octonion_matrix(&mut rng, n, p);
        let b = octonion_matrix(&mut rng, p, q);
        let s = octonion(&mut rng);
        let vx = x.vec();

        // AX
        let lhs = mat_apply(&a, &x).unwrap().vec();
        let op = block_kron_left(&block_identity(p), &a.left_adjoint()).unwrap();
        assert!(close(&lhs, &op.mat_vec(&vx).unwrap(), 1e-12));

        // XB
        let lhs = mat_apply(&x, &b).unwrap().vec();
        let op = block_kron_left(&b.right_adjoint(), &block_identity(n)).unwrap();
        assert!(close(&lhs, &op.mat_vec(&vx).unwrap(), 1e-12));

        // Xs for a column X and scalar s
        let col = octonion_matrix(&mut rng, n, 1);
        let lhs = mat_apply(&col, &OctonionMatrix::scalar(s)).unwrap().vec();
        let op = block_kron_left(&OctonionMatrix::scalar(s).right_adjoint(), &block_identity(n)).unwrap();
        assert!(close(&lhs, &op.mat_vec(&col.vec()).unwrap(), 1e-12));

        // AX for a column X
        let xcol = octonion_matrix(&mut rng, n, 1);
        let lhs = mat_apply(&a, &xcol).unwrap().vec();
        assert!(close(&lhs, &a.left_adjoint().mat_vec(&xcol.vec()).unwrap(), 1e-12));

        // (AX)B and A(XB)
        let outer = mat_apply(&mat_apply(&a, &x).unwrap(), &b).unwrap().vec();
        let op = block_kron_left(&b.right_adjoint(), &a.left_adjoint()).unwrap();
        assert!(close(&outer, &op.mat_vec(&vx).unwrap(), 1e-12));
        let inner = mat_apply(&a, &mat_apply(&x, &b).unwrap()).unwrap().vec();
        let op = block_kron_right(&a.left_adjoint(), &b.right_adjoint()).unwrap();
        assert!(close(&inner, &op.mat_vec(&vx).unwrap(), 1e-12));
    }
}

#[test]
fn nested_powers() {
    let a = OctonionMatrix::scalar(e(1));
    let one = OctonionMatrix::scalar(Octonion::ONE);
    assert_eq!(nested_left(&a, &one, 2).unwrap(), OctonionMatrix::scalar(-Octonion::ONE));
    assert_eq!(nested_left(&a, &one, 1).unwrap(), a);
    assert!(nested_left(&a, &one, 0).is_err());
    assert!(nested_left(&octonion_matrix(&mut trial_rng(5, 0), 2, 3), &one, 1).is_err());

    for (mut rng, m, p, _, _) in shapes(5, 100) {
        let a = octonion_matrix(&mut rng, m, m);
        let x = octonion_matrix(&mut rng, m, p);
        let y = octonion_matrix(&mut rng, p, m);
        for k in 1..=3 {
            let w = a.left_adjoint().pow(k).unwrap();
            let op = block_kron_left(&block_identity(p), &w).unwrap();
            let lhs = nested_left(&a, &x, k).unwrap().vec();
            assert!(close(&lhs, &op.mat_vec(&x.vec()).unwrap(), 1e-9));
            let v = a.right_adjoint().pow(k).unwrap();
            let op = block_kron_left(&v, &block_identity(p)).unwrap();
            let lhs = nested_right(&y, &a, k).unwrap().vec();
            assert!(close(&lhs, &op.mat_vec(&y.vec()).unwrap(), 1e-9));
        }
    }
}

#[test]
fn matrix_equations_round_trip() {
    for (mut rng, m, n, p, q) in shapes(6, 150) {
        let a = octonion_matrix(&mut rng, m, n);
        let x = octonion_matrix(&mut rng, n, p);
        let b = octonion_matrix(&mut rng, p, q);
        let sq_a = octonion_matrix(&mut rng, n, n);
        let sq_b = octonion_matrix(&mut rng, p, p);
        let xa = octonion_matrix(&mut rng, q, n);

        let rhs1 = mat_apply(&a, &x).unwrap();
        let rhs2 = mat_apply(&xa, &sq_a).unwrap();
        let rhs3 = mat_apply(&mat_apply(&a, &x).unwrap(), &b).unwrap();
        let rhs4 = mat_apply(&a, &mat_apply(&x, &b).unwrap()).unwrap();
        let rhs5 = &mat_apply(&sq_a, &x).unwrap() - &mat_apply(&x, &sq_b).unwrap();
        let xs = octonion_matrix(&mut rng, n, n);
        let rhs6 = &mat_apply(&mat_apply(&sq_a, &xs).unwrap(), &sq_a).unwrap()
            - &mat_apply(&sq_a, &mat_apply(&xs, &sq_a).unwrap()).unwrap();

        let cases = [
            (MatrixEquation::LeftMul { a: &a, rhs: &rhs1 }, &x),
            (MatrixEquation::RightMul { a: &sq_a, rhs: &rhs2 }, &xa),
            (MatrixEquation::OuterProduct { a: &a, b: &b, rhs: &rhs3 }, &x),
            (MatrixEquation::InnerProduct { a: &a, b: &b, rhs: &rhs4 }, &x),
            (MatrixEquation::Sylvester { a: &sq_a, b: &sq_b, rhs: &rhs5 }, &x),
            (MatrixEquation::Associator { a: &sq_a, rhs: &rhs6 }, &xs),
        ];
        for (eq, truth) in cases {
            let set = eq.solve().unwrap();
            assert!(set.solvable, "{eq:?}");
            assert!(set.residual <= 1e-9 * (1.0 + eq.rhs().norm_fro()), "residual {}", set.residual);
            for h in &set.null_basis {
                assert!(eq.apply(h).unwrap().norm_fro() < 1e-9);
            }
            // truth − particular lies in the homogeneous space
            let mut diff = (truth - set.particular.as_ref().unwrap()).vec();
            for h in &set.null_basis {
                let hv = h.vec();
                diff = diff.axpy(-diff.dot(&hv), &hv);
            }
            assert!(diff.norm() < 1e-7, "{eq:?}: {}", diff.norm());
        }
    }
}

#[test]
fn matrix_equation_examples() {
    let a = OctonionMatrix::scalar(e(1));
    let id = OctonionMatrix::identity(1);
    let set = MatrixEquation::Sylvester { a: &a, b: &a, rhs: &id }.solve().unwrap();
    assert!(!set.solvable);

    let bad = OctonionMatrix::zeros(2, 2);
    assert!(MatrixEquation::LeftMul { a: &a, rhs: &bad }.solve().is_err());
}

#[test]
fn inner_product_uniqueness() {
    let mut rng = trial_rng(7, 0);
    let a = unit_scaled(&mut rng, 2);
    let b = unit_scaled(&mut rng, 2);
    let c = octonion_matrix(&mut rng, 2, 2);
    let set = MatrixEquation::InnerProduct { a: &a, b: &b, rhs: &c }.solve().unwrap();
    assert!(set.null_basis.is_empty());
    let left = InverseOperator::new(OperatorSide::LeftOp, &a).unwrap().apply(&c).unwrap();
    let x = InverseOperator::new(OperatorSide::RightOp, &b).unwrap().apply(&left).unwrap();
    assert!(x.max_entry_dist(set.particular.as_ref().unwrap()) < 1e-7);
}

#[test]
fn complete_invertibility() {
    assert!(is_completely_invertible(&OctonionMatrix::identity(3)).unwrap());
    assert!(is_completely_invertible(&OctonionMatrix::scalar(e(1))).unwrap());
    let mut z = octonion_matrix(&mut trial_rng(8, 0), 3, 3);
    for c in 0..3 {
        z[(1, c)] = Octonion::ZERO;
    }
    assert!(!is_completely_invertible(&z).unwrap());
    assert!(matches!(InverseOperator::new(OperatorSide::LeftOp, &z), Err(Error::NotCompletelyInvertible)));
    assert!(is_completely_invertible(&OctonionMatrix::zeros(2, 3)).is_err());
}

#[test]
fn cancellation() {
    for t in 0..20 {
        let mut rng = trial_rng(9, t);
        let a = unit_scaled(&mut rng, 2);
        let b1 = octonion_matrix(&mut rng, 2, 2);
        let ab = mat_apply(&a, &b1).unwrap();
        let set = MatrixEquation::LeftMul { a: &a, rhs: &ab }.solve().unwrap();
        assert!(set.null_basis.is_empty());
        assert!(set.particular.unwrap().max_entry_dist(&b1) < 1e-8);
    }
}

#[test]
fn inverse_operator_laws() {
    for t in 0..30 {
        let mut rng = trial_rng(10, t);
        let a = unit_scaled(&mut rng, 2);
        let b = octonion_matrix(&mut rng, 2, 2);
        let l = InverseOperator::new(OperatorSide::LeftOp, &a).unwrap();
        let r = InverseOperator::new(OperatorSide::RightOp, &a).unwrap();
        // the polynomial amplifies rounding by about Σ|rᵢ| / |r₀|
        let p = l.poly();
        let tol = 1e-10 + 1e-13 * p.abs_sum() / p.coeffs[0].abs();
        assert!(mat_apply(&a, &l.apply(&b).unwrap()).unwrap().max_entry_dist(&b) < tol);
        assert!(l.apply(&mat_apply(&a, &b).unwrap()).unwrap().max_entry_dist(&b) < tol);
        assert!(mat_apply(&r.apply(&b).unwrap(), &a).unwrap().max_entry_dist(&b) < tol);
        assert!(r.apply(&mat_apply(&b, &a).unwrap()).unwrap().max_entry_dist(&b) < tol);
        assert!(l.apply(&a).unwrap().max_entry_dist(&OctonionMatrix::identity(2)) < tol);
    }
}

#[test]
fn scalar_inverses() {
    let x = Octonion::ONE + e(1);
    let li = left_inverse(&OctonionMatrix::scalar(x)).unwrap();
    let ri = right_inverse(&OctonionMatrix::scalar(x)).unwrap();
    let want = (Octonion::ONE - e(1)) * 0.5;
    assert!(li[(0, 0)].dist(want) < 1e-12);
    assert!(ri[(0, 0)].dist(want) < 1e-12);
    for t in 0..50 {
        let a = octonion(&mut trial_rng(11, t));
        let li = left_inverse(&OctonionMatrix::scalar(a)).unwrap();
        assert!(li[(0, 0)].dist(a.inv().unwrap()) < 1e-12);
    }
}

#[test]
fn matrix_inverses() {
    let id = OctonionMatrix::identity(2);
    assert!(left_inverse(&id).unwrap().max_entry_dist(&id) < 1e-12);
    assert!(right_inverse(&id).unwrap().max_entry_dist(&id) < 1e-12);
    let u = OctonionMatrix::from_rows(vec![vec![Octonion::ONE, e(1)], vec![Octonion::ZERO, Octonion::ONE]]).unwrap();
    let li = left_inverse(&u).unwrap();
    let ri = right_inverse(&u).unwrap();
    assert!(mat_apply(&li, &u).unwrap().max_entry_dist(&id) < 1e-8);
    assert!(mat_apply(&u, &ri).unwrap().max_entry_dist(&id) < 1e-8);
}

#[test]
fn cayley_hamilton() {
    let ch = cayley_hamilton_residuals(&OctonionMatrix::scalar(e(1))).unwrap();
    assert!(ch.left < 1e-10 && ch.right < 1e-10);
    let ch = cayley_hamilton_residuals(&OctonionMatrix::identity(1)).unwrap();
    assert_eq!((ch.left, ch.right), (0.0, 0.0));
    for m in 1..=3 {
        for t in 0..10 {
            let a = unit_scaled(&mut trial_rng(12 + m as u64, t), m);
            let ch = cayley_hamilton_residuals(&a).unwrap();
            assert!(ch.within(1e-6), "m={m}: {ch:?}");
        }
    }
    assert!(matches!(
        cayley_hamilton_residuals(&OctonionMatrix::identity(4)),
        Err(Error::UnsupportedSize(_))
    ));
}

#[test]
fn json_round_trip() {
    let a = octonion_matrix(&mut trial_rng(20, 0), 2, 3);
    let text = a.to_json();
    assert_eq!(OctonionMatrix::from_json(&text).unwrap(), a);
    let via_serde: OctonionMatrix = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
    assert_eq!(via_serde, a);
    assert!(OctonionMatrix::from_json(r#"{"rows": 2, "cols": 1, "entries": [[[1,0,0,0,0,0,0,0]]]}"#).is_err());
    assert!(OctonionMatrix::from_json(r#"{"rows": 1, "cols": 1, "entries": [[[1,0,0]]]}"#).is_err());
    let one = OctonionMatrix::from_json(r#"{"rows":1,"cols":1,"entries":[[[1,0,0,0,0,0,0,2.5e0]]]}"#).unwrap();
    assert_eq!(one[(0, 0)][7], 2.5);
}
