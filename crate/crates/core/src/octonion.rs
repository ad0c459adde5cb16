//! The octonion division algebra.
//!
//! An octonion is stored by its 8 coefficients in the basis
//! `1, e1, ..., e7` with `e1 = i`, `e2 = j`, `e3 = k`, `e4 = e`, `e5 = ie`,
//! `e6 = je`, `e7 = ke`. Multiplication follows the Cayley–Dickson doubling
//! of the quaternions:
//!
//! ```text
//! (a' + a''e)(b' + b''e) = (a'b' - conj(b'')a'') + (b''a' + a''conj(b'))e
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt_real;
use crate::quaternion::Quaternion;

#[derive(Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion(pub [f64; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    pub const fn new(c: [f64; 8]) -> Self {
        Octonion(c)
    }

    /// Basis element `e_i` (`e_0 = 1`).
    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "octonion basis index {i} out of range");
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Octonion(c)
    }

    pub fn real(x: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = x;
        Octonion(c)
    }

    /// `a' + a''e`
    pub fn from_quaternions(first: Quaternion, second: Quaternion) -> Self {
        let [a0, a1, a2, a3] = first.to_array();
        let [a4, a5, a6, a7] = second.to_array();
        Octonion([a0, a1, a2, a3, a4, a5, a6, a7])
    }

    /// The Cayley–Dickson pair `(a', a'')`.
    pub fn split(self) -> (Quaternion, Quaternion) {
        let c = self.0;
        (
            Quaternion::new(c[0], c[1], c[2], c[3]),
            Quaternion::new(c[4], c[5], c[6], c[7]),
        )
    }

    pub fn coeffs(&self) -> &[f64; 8] {
        &self.0
    }

    pub fn conj(self) -> Self {
        let mut c = self.0.map(|v| -v);
        c[0] = self.0[0];
        Octonion(c)
    }

    pub fn re(self) -> f64 {
        self.0[0]
    }

    pub fn im(self) -> Self {
        let mut c = self.0;
        c[0] = 0.0;
        Octonion(c)
    }

    pub fn norm_sqr(self) -> f64 {
        self.0.iter().map(|v| v * v).sum()
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `ā / |a|²`
    pub fn inv(self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::DivisionByZero("inverse of the zero octonion"));
        }
        Ok(self.conj() * (1.0 / n2))
    }

    pub fn scale(self, s: f64) -> Self {
        Octonion(self.0.map(|v| v * s))
    }

    pub fn is_finite(self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    /// Euclidean distance between coefficient vectors.
    pub fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }

    /// `a b a`, evaluated as `(ab)a` (flexibility makes this unambiguous).
    pub fn sandwich(a: Self, b: Self) -> Self {
        (a * b) * a
    }
}

/// `(a, b, x) = (ab)x - a(bx)`
pub fn associator(a: Octonion, b: Octonion, x: Octonion) -> Octonion {
    (a * b) * x - a * (b * x)
}

impl Index<usize> for Octonion {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, o: Octonion) -> Octonion {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(o.0) {
            *a += b;
        }
        Octonion(c)
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, o: Octonion) {
        *self = *self + o;
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, o: Octonion) -> Octonion {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(o.0) {
            *a -= b;
        }
        Octonion(c)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(self.0.map(|v| -v))
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, o: Octonion) -> Octonion {
        let (a1, a2) = self.split();
        let (b1, b2) = o.split();
        Octonion::from_quaternions(a1 * b1 - b2.conj() * a2, b2 * a1 + a2 * b1.conj())
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, s: f64) -> Octonion {
        self.scale(s)
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion({self})")
    }
}

/// Comma-separated literal `c0,c1,...,c7`.
impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|&v| fmt_real(v)).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Octonion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 8 {
            return Err(Error::Parse(format!(
                "octonion literal needs 8 comma-separated reals, got {} in {s:?}",
                parts.len()
            )));
        }
        let mut c = [0.0; 8];
        for (slot, p) in c.iter_mut().zip(&parts) {
            let v: f64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("not a real number: {p:?}")))?;
            if !v.is_finite() {
                return Err(Error::Parse(format!("non-finite coefficient: {p:?}")));
            }
            *slot = v;
        }
        Ok(Octonion(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Products of basis elements read off the multiplication table:
    /// `TABLE[i][j] = (sign, k)` meaning `e_i e_j = sign * e_k`.
    const TABLE: [[(i8, usize); 8]; 8] = [
        [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
        [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
        [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
        [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
    ];

    fn table_product(a: Octonion, b: Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for i in 0..8 {
            for j in 0..8 {
                let (s, k) = TABLE[i][j];
                out[k] += f64::from(s) * a[i] * b[j];
            }
        }
        Octonion(out)
    }

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    fn samples(n: usize) -> Vec<Octonion> {
        (0..n)
            .map(|t| {
                let t = t as f64;
                Octonion(std::array::from_fn(|k| ((k as f64 + 1.0) * 0.731 * t + 0.17 * k as f64).sin()))
            })
            .collect()
    }

    #[test]
    fn basis_products() {
        assert_eq!(e(1) * e(2), e(3));
        assert_eq!(e(4) * e(5), e(1));
        assert_eq!(e(7) * e(7), -Octonion::ONE);
    }

    #[test]
    fn cayley_dickson_matches_structure_constants() {
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(e(i) * e(j), table_product(e(i), e(j)), "e{i} e{j}");
            }
        }
        let s = samples(40);
        for w in s.windows(2) {
            assert!((w[0] * w[1]).dist(table_product(w[0], w[1])) < 1e-14);
        }
    }

    #[test]
    fn conjugate_norm_inverse() {
        assert_eq!(e(5).conj(), -e(5));
        assert_eq!(e(7).inv().unwrap(), -e(7));
        assert_eq!(Octonion([1.0; 8]).norm(), 8f64.sqrt());
        assert!(matches!(Octonion::ZERO.inv(), Err(Error::DivisionByZero(_))));
        for a in samples(20) {
            assert!((a * a.inv().unwrap()).dist(Octonion::ONE) < 1e-12);
        }
    }

    #[test]
    fn associator_examples() {
        let s = samples(10);
        for w in s.windows(2) {
            assert_eq!(associator(Octonion::ONE, w[0], w[1]), Octonion::ZERO);
            assert!(associator(w[0], w[0], w[1]).norm() < 1e-14);
        }
        assert_eq!(associator(e(1), e(2), e(4)), e(7) * 2.0);
    }

    #[test]
    fn literal_round_trip() {
        let a: Octonion = "0,1,0,0,0,0,0,0".parse().unwrap();
        assert_eq!(a, e(1));
        assert_eq!(e(1).to_string(), "0,1,0,0,0,0,0,0");
        for x in samples(10) {
            assert_eq!(x.to_string().parse::<Octonion>().unwrap(), x);
        }
        assert!("1,2,3".parse::<Octonion>().is_err());
        assert!("1,2,3,4,5,6,7,x".parse::<Octonion>().is_err());
        assert!("1,2,3,4,5,6,7,inf".parse::<Octonion>().is_err());
    }

    #[test]
    fn quaternion_pair_round_trip() {
        for x in samples(5) {
            let (p, q) = x.split();
            assert_eq!(Octonion::from_quaternions(p, q), x);
        }
    }
}
