//! Real quaternions and their two 4x4 real matrix representations.
//!
//! `phi(a)` represents left multiplication and `tau(b)` right multiplication
//! on coefficient vectors: `vec(a x b) = phi(a) tau(b) vec(x)`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::realmat::{RealMatrix, RealVector};

/// `w + x i + y j + z k`
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_array(c: [f64; 4]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `ā / |a|²`
    pub fn inv(self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::DivisionByZero("inverse of the zero quaternion"));
        }
        Ok(self.conj() * (1.0 / n2))
    }

    /// Left multiplication matrix: `vec(a x) = phi(a) vec(x)`.
    pub fn phi(self) -> RealMatrix {
        let Quaternion { w, x, y, z } = self;
        RealMatrix::from_rows(&[
            vec![w, -x, -y, -z],
            vec![x, w, -z, y],
            vec![y, z, w, -x],
            vec![z, -y, x, w],
        ])
        .expect("4x4 pattern")
    }

    /// Right multiplication matrix: `vec(x b) = tau(b) vec(x)`.
    pub fn tau(self) -> RealMatrix {
        let Quaternion { w, x, y, z } = self;
        RealMatrix::from_rows(&[
            vec![w, -x, -y, -z],
            vec![x, w, z, -y],
            vec![y, -z, w, x],
            vec![z, y, -x, w],
        ])
        .expect("4x4 pattern")
    }

    pub fn to_vec(self) -> RealVector {
        RealVector(self.to_array().to_vec())
    }

    pub fn from_vec(v: &RealVector) -> Result<Self> {
        match v.as_slice() {
            &[w, x, y, z] => Ok(Quaternion::new(w, x, y, z)),
            other => Err(Error::DimensionMismatch(format!(
                "quaternion needs 4 coefficients, got {}",
                other.len()
            ))),
        }
    }
}

/// `diag(1, -1, -1, -1)`, the sign matrix linking `tau` to `phiᵀ`.
pub fn k4() -> RealMatrix {
    RealMatrix::from_diagonal(&[1.0, -1.0, -1.0, -1.0])
}

/// The 4x4 quaternion unitary `Q` with `Q diag(a, a, a, a) Q* = phi(a)`.
pub fn unitary_q() -> [[Quaternion; 4]; 4] {
    let (one, i, j, k) = (Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K);
    [[one, i, j, k], [-i, one, k, -j], [-j, -k, one, i], [-k, j, -i, one]]
        .map(|row| row.map(|e| e * 0.5))
}

/// Evaluates `Q diag(a, a, a, a) Q*` in quaternion arithmetic.
pub fn diagonal_similarity(a: Quaternion) -> [[Quaternion; 4]; 4] {
    let q = unitary_q();
    let mut out = [[Quaternion::ZERO; 4]; 4];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            *entry = (0..4).fold(Quaternion::ZERO, |acc, t| acc + q[r][t] * a * q[c][t].conj());
        }
    }
    out
}

/// Largest quaternion-norm gap between `Q diag(a, a, a, a) Q*` and the real
/// matrix `phi(a)` embedded entrywise.
pub fn diagonal_similarity_defect(a: Quaternion) -> f64 {
    let lhs = diagonal_similarity(a);
    let rhs = a.phi();
    let mut worst: f64 = 0.0;
    for (r, row) in lhs.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            let real = Quaternion::new(rhs[(r, c)], 0.0, 0.0, 0.0);
            worst = worst.max((*entry - real).norm());
        }
    }
    worst
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product (`ij = k`, `ijk = -1`).
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realmat::determinant;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z)
    }

    fn samples() -> Vec<Quaternion> {
        (0..50)
            .map(|i| {
                let t = i as f64;
                q((t * 0.37).sin(), (t * 1.13).cos(), (t * 0.71 + 0.3).sin(), (t * 2.03).cos() * 0.5)
            })
            .collect()
    }

    #[test]
    fn basis_rules() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::I * Quaternion::J * Quaternion::K, -Quaternion::ONE);
        assert_eq!(Quaternion::I * Quaternion::I, -Quaternion::ONE);
        let b = q(0.3, -1.0, 2.0, 0.5);
        assert_eq!(Quaternion::ONE * b, b);
    }

    #[test]
    fn conj_norm_inverse() {
        assert_eq!(Quaternion::I.conj(), -Quaternion::I);
        assert_eq!(q(1.0, 1.0, 1.0, 1.0).norm(), 2.0);
        assert_eq!(q(1.0, 1.0, 0.0, 0.0).inv().unwrap(), q(0.5, -0.5, 0.0, 0.0));
        assert!(matches!(Quaternion::ZERO.inv(), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn norm_is_multiplicative() {
        let s = samples();
        for w in s.windows(2) {
            let (a, b) = (w[0], w[1]);
            let lhs = (a * b).norm();
            let rhs = a.norm() * b.norm();
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
        }
    }

    #[test]
    fn phi_patterns() {
        assert_eq!(Quaternion::ONE.phi(), RealMatrix::identity(4));
        let expected = RealMatrix::from_rows(&[
            vec![0.0, -1.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, -1.0],
            vec![0.0, 0.0, 1.0, 0.0],
        ])
        .unwrap();
        assert_eq!(Quaternion::I.phi(), expected);
        assert!((determinant(&q(1.0, 1.0, 0.0, 0.0).phi()).unwrap() - 4.0).abs() < 1e-14);
        assert!((determinant(&q(1.0, 1.0, 0.0, 0.0).tau()).unwrap() - 4.0).abs() < 1e-14);
    }

    #[test]
    fn tau_patterns() {
        assert_eq!(Quaternion::ONE.tau(), RealMatrix::identity(4));
        let expected = RealMatrix::from_rows(&[
            vec![0.0, -1.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
            vec![0.0, 0.0, -1.0, 0.0],
        ])
        .unwrap();
        assert_eq!(Quaternion::I.tau(), expected);
        let k = k4();
        for a in samples() {
            assert_eq!(&(&k * &a.phi().transpose()) * &k, a.tau());
        }
    }

    #[test]
    fn representation_laws() {
        let s = samples();
        for w in s.windows(2) {
            let (a, b) = (w[0], w[1]);
            assert_eq!((a + b).phi(), &a.phi() + &b.phi());
            assert!((a * b).phi().max_abs_diff(&(&a.phi() * &b.phi())) < 1e-15);
            assert!((a * b).tau().max_abs_diff(&(&b.tau() * &a.tau())) < 1e-15);
            assert_eq!(a.conj().phi(), a.phi().transpose());
            assert_eq!(a.conj().tau(), a.tau().transpose());
            assert!((&a.phi() * &b.tau()).max_abs_diff(&(&b.tau() * &a.phi())) < 1e-15);
        }
    }

    #[test]
    fn q_factorisation_reproduces_phi() {
        for a in samples() {
            assert!(diagonal_similarity_defect(a) < 1e-15);
        }
        // Q is unitary: Q Q* = I
        let q = unitary_q();
        for r in 0..4 {
            for c in 0..4 {
                let e = (0..4).fold(Quaternion::ZERO, |acc, t| acc + q[r][t] * q[c][t].conj());
                let want = if r == c { Quaternion::ONE } else { Quaternion::ZERO };
                assert!((e - want).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn vector_representation() {
        assert_eq!(Quaternion::ONE.to_vec().0, vec![1.0, 0.0, 0.0, 0.0]);
        let s = samples();
        for w in s.windows(3) {
            let (a, x, b) = (w[0], w[1], w[2]);
            let ax = a.phi().mat_vec(&x.to_vec()).unwrap();
            assert!(ax.max_abs_diff(&(a * x).to_vec()) < 1e-15);
            let xb = b.tau().mat_vec(&x.to_vec()).unwrap();
            assert!(xb.max_abs_diff(&(x * b).to_vec()) < 1e-15);
            let axb = (&a.phi() * &b.tau()).mat_vec(&x.to_vec()).unwrap();
            assert!(axb.max_abs_diff(&(a * x * b).to_vec()) < 1e-12);
        }
        assert_eq!(Quaternion::from_vec(&q(1.0, 2.0, 3.0, 4.0).to_vec()).unwrap(), q(1.0, 2.0, 3.0, 4.0));
        assert!(Quaternion::from_vec(&RealVector(vec![1.0])).is_err());
    }
}
