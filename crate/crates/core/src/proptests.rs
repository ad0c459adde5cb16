//! Property tests over arbitrary finite inputs.

use proptest::prelude::*;

use crate::octonion::{associator, Octonion};
use crate::olinsolve::solve_sylvester;
use crate::omatrix::{mat_apply, OctonionMatrix};
use crate::orep::{delta, nu, o_vec, omega};

fn coeff() -> impl Strategy<Value = f64> {
    -4.0f64..4.0
}

fn oct() -> impl Strategy<Value = Octonion> {
    proptest::array::uniform8(coeff()).prop_map(Octonion)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = OctonionMatrix> {
    proptest::collection::vec(oct(), rows * cols).prop_map(move |v| {
        let mut it = v.into_iter();
        OctonionMatrix::from_fn(rows, cols, |_, _| it.next().expect("enough entries"))
    })
}

fn scale(xs: &[Octonion]) -> f64 {
    xs.iter().map(|x| 1.0 + x.norm()).product()
}

proptest! {
    #[test]
    fn literal_round_trip(a in oct()) {
        prop_assert_eq!(a.to_string().parse::<Octonion>().unwrap(), a);
    }

    #[test]
    fn norm_is_multiplicative(a in oct(), b in oct()) {
        prop_assert!(((a * b).norm() - a.norm() * b.norm()).abs() <= 1e-12 * scale(&[a, b]));
    }

    #[test]
    fn alternative_and_flexible(a in oct(), b in oct()) {
        let s = 1e-12 * scale(&[a, a, b]);
        prop_assert!(associator(a, a, b).norm() <= s);
        prop_assert!(associator(b, a, a).norm() <= s);
        prop_assert!(((a * b) * a).dist(a * (b * a)) <= s);
    }

    #[test]
    fn representations_act_on_vectors(a in oct(), x in oct()) {
        let s = 1e-12 * scale(&[a, x]);
        prop_assert!(omega(a).mat_vec(&o_vec(x)).unwrap().max_abs_diff(&o_vec(a * x)) <= s);
        prop_assert!(nu(a).mat_vec(&o_vec(x)).unwrap().max_abs_diff(&o_vec(x * a)) <= s);
    }

    #[test]
    fn delta_is_normal(a in oct(), b in oct()) {
        let d = delta(a, b);
        let dt = d.transpose();
        prop_assert!((&d * &dt).max_abs_diff(&(&dt * &d)) <= 1e-11 * scale(&[a, b]).powi(2));
    }

    #[test]
    fn sylvester_round_trip(a in oct(), b in oct(), x in oct()) {
        let set = solve_sylvester(a, b, a * x - x * b).unwrap();
        prop_assert!(set.solvable);
        prop_assert!(set.residual <= 1e-9 * scale(&[a, b, x]));
    }

    #[test]
    fn matrix_json_round_trip(m in matrix(2, 3)) {
        prop_assert_eq!(OctonionMatrix::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn left_adjoint_acts_on_vec(a in matrix(2, 3), x in matrix(3, 2)) {
        let lhs = mat_apply(&a, &x).unwrap().vec();
        let w = a.left_adjoint();
        let mut rhs = Vec::new();
        for c in 0..2 {
            let col = OctonionMatrix::from_fn(3, 1, |r, _| x[(r, c)]);
            rhs.extend(w.mat_vec(&col.vec()).unwrap().0);
        }
        let diff = lhs.0.iter().zip(&rhs).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max);
        prop_assert!(diff <= 1e-10 * (1.0 + a.norm_fro()) * (1.0 + x.norm_fro()));
    }
}
