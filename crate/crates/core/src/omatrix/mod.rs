//! Dense octonion matrices and their real adjoints.
//!
//! Products of octonion matrices are evaluated entrywise with left-to-right
//! inner sums and never reassociated; `A(BC)` and `(AB)C` differ in general.
//! Nesting is always explicit, see [`nested_left`] and [`nested_right`].

mod equation;
mod inverse;
mod kron;

pub use equation::MatrixEquation;
pub use inverse::{
    cayley_hamilton_residuals, is_completely_invertible, left_inverse, right_inverse,
    CayleyHamilton, InverseOperator, OperatorSide,
};
pub use kron::{block_identity, block_kron_left, block_kron_right};

use std::fmt;
use std::ops::{Add, Index, IndexMut, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt_real;
use crate::octonion::Octonion;
use crate::orep::{k8, nu, omega, reconstruct_from_left};
use crate::realmat::{RealMatrix, RealVector};

#[derive(Clone, PartialEq)]
pub struct OctonionMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Octonion>,
}

impl OctonionMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        OctonionMatrix {
            rows,
            cols,
            entries: vec![Octonion::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Octonion::ONE } else { Octonion::ZERO })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Octonion) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        OctonionMatrix { rows, cols, entries }
    }

    /// Builds a matrix from nested rows; all rows must have equal length and
    /// every coefficient must be finite.
    pub fn from_rows(rows: Vec<Vec<Octonion>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::DimensionMismatch("octonion matrix must be non-empty".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {n}",
                rows[bad].len()
            )));
        }
        let entries: Vec<Octonion> = rows.into_iter().flatten().collect();
        if !entries.iter().all(|e| e.is_finite()) {
            return Err(Error::NonFinite("octonion matrix entries"));
        }
        Ok(OctonionMatrix { rows: m, cols: n, entries })
    }

    /// A 1×1 matrix.
    pub fn scalar(a: Octonion) -> Self {
        OctonionMatrix {
            rows: 1,
            cols: 1,
            entries: vec![a],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Octonion] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// `A*`: transpose with every entry conjugated.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|e| e * s)
    }

    pub fn map(&self, f: impl Fn(Octonion) -> Octonion) -> Self {
        OctonionMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| f(e)).collect(),
        }
    }

    /// Largest entry norm.
    pub fn max_entry_norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// Square root of the sum of all squared coefficients.
    pub fn norm_fro(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise distance; infinite when shapes differ.
    pub fn max_entry_dist(&self, other: &Self) -> f64 {
        if self.shape() != other.shape() {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.dist(*b))
            .fold(0.0, f64::max)
    }

    /// `max ‖A − A*‖` over entries, or an error when not square.
    pub fn hermitian_deviation(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.max_entry_dist(&self.conj_transpose()))
    }

    /// Blockwise `ω(a_st)`, an `8m × 8n` real matrix.
    pub fn left_adjoint(&self) -> RealMatrix {
        let mut w = RealMatrix::zeros(8 * self.rows, 8 * self.cols);
        for s in 0..self.rows {
            for t in 0..self.cols {
                w.set_block(8 * s, 8 * t, &omega(self[(s, t)]));
            }
        }
        w
    }

    /// Transposed layout: block `(s, t)` is `ν(a_ts)`, an `8n × 8m` real
    /// matrix, so that `vec(XA) = [ν(A) ⊗̂ I] vec X`.
    pub fn right_adjoint(&self) -> RealMatrix {
        let mut v = RealMatrix::zeros(8 * self.cols, 8 * self.rows);
        for s in 0..self.cols {
            for t in 0..self.rows {
                v.set_block(8 * s, 8 * t, &nu(self[(t, s)]));
            }
        }
        v
    }

    /// Column-stacked coefficient vector: `a_11, a_21, …, a_m1, a_12, …`,
    /// each entry contributing its 8 coefficients.
    pub fn vec(&self) -> RealVector {
        let mut v = Vec::with_capacity(8 * self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                v.extend_from_slice(&self[(r, c)].0);
            }
        }
        RealVector(v)
    }

    /// Inverse of [`vec`](Self::vec).
    pub fn unvec(rows: usize, cols: usize, v: &RealVector) -> Result<Self> {
        if v.dim() != 8 * rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of dim {} cannot fill a {rows}x{cols} octonion matrix",
                v.dim()
            )));
        }
        let s = v.as_slice();
        Ok(Self::from_fn(rows, cols, |r, c| {
            let k = 8 * (c * rows + r);
            Octonion(std::array::from_fn(|i| s[k + i]))
        }))
    }

    /// Recovers `A` from its left adjoint using octonion products only.
    pub fn from_left_adjoint(w: &RealMatrix) -> Result<Self> {
        if !w.rows().is_multiple_of(8) || !w.cols().is_multiple_of(8) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} is not a grid of 8x8 blocks",
                w.rows(),
                w.cols()
            )));
        }
        let (m, n) = (w.rows() / 8, w.cols() / 8);
        let mut entries = Vec::with_capacity(m * n);
        for s in 0..m {
            for t in 0..n {
                entries.push(reconstruct_from_left(&w.block(8 * s, 8 * t, 8, 8))?);
            }
        }
        Ok(OctonionMatrix { rows: m, cols: n, entries })
    }

    /// `diag(K₈, …, K₈)` with `n` blocks; `ν(A) = K_{8n} ωᵀ(A) K_{8m}`.
    pub fn k_block(n: usize) -> RealMatrix {
        let k = k8();
        let mut out = RealMatrix::zeros(8 * n, 8 * n);
        for i in 0..n {
            out.set_block(8 * i, 8 * i, &k);
        }
        out
    }

    /// Parses the JSON matrix document
    /// `{"rows": m, "cols": n, "entries": [[[c0, …, c7], …], …]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MatrixDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        if doc.entries.len() != doc.rows {
            return Err(Error::Parse(format!(
                "\"rows\" is {} but {} rows are listed",
                doc.rows,
                doc.entries.len()
            )));
        }
        if let Some(row) = doc.entries.iter().find(|r| r.len() != doc.cols) {
            return Err(Error::Parse(format!(
                "\"cols\" is {} but a row lists {} entries",
                doc.cols,
                row.len()
            )));
        }
        let rows = doc
            .entries
            .into_iter()
            .map(|r| r.into_iter().map(Octonion).collect())
            .collect();
        OctonionMatrix::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Writes the JSON matrix document with 17 significant digits per value.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\"rows\": {}, \"cols\": {}, \"entries\": [", self.rows, self.cols);
        for r in 0..self.rows {
            out.push_str(if r == 0 { "\n  [" } else { ",\n  [" });
            for c in 0..self.cols {
                if c > 0 {
                    out.push_str(", ");
                }
                let parts: Vec<String> = self[(r, c)].0.iter().map(|&v| fmt_real(v)).collect();
                out.push('[');
                out.push_str(&parts.join(", "));
                out.push(']');
            }
            out.push(']');
        }
        out.push_str("\n]}\n");
        out
    }
}

#[derive(Deserialize, Serialize)]
struct MatrixDocument {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<[f64; 8]>>,
}

/// `(AX)_st = Σ_k a_sk x_kt`, summed left to right.
pub fn mat_apply(a: &OctonionMatrix, x: &OctonionMatrix) -> Result<OctonionMatrix> {
    if a.cols != x.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, x.rows, x.cols
        )));
    }
    Ok(OctonionMatrix::from_fn(a.rows, x.cols, |s, t| {
        let mut acc = Octonion::ZERO;
        for k in 0..a.cols {
            acc += a[(s, k)] * x[(k, t)];
        }
        acc
    }))
}

fn check_power(a: &OctonionMatrix, k: usize) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    if k == 0 {
        return Err(Error::InvalidArgument("nesting depth must be at least 1".into()));
    }
    Ok(())
}

/// `A(A(⋯(AX)⋯))` with `k` factors of `A`.
pub fn nested_left(a: &OctonionMatrix, x: &OctonionMatrix, k: usize) -> Result<OctonionMatrix> {
    check_power(a, k)?;
    let mut y = x.clone();
    for _ in 0..k {
        y = mat_apply(a, &y)?;
    }
    Ok(y)
}

/// `((YA)A⋯)A` with `k` factors of `A`.
pub fn nested_right(y: &OctonionMatrix, a: &OctonionMatrix, k: usize) -> Result<OctonionMatrix> {
    check_power(a, k)?;
    let mut z = y.clone();
    for _ in 0..k {
        z = mat_apply(&z, a)?;
    }
    Ok(z)
}

impl Index<(usize, usize)> for OctonionMatrix {
    type Output = Octonion;
    fn index(&self, (r, c): (usize, usize)) -> &Octonion {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for OctonionMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Octonion {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &mut self.entries[r * self.cols + c]
    }
}

fn zip_entries(a: &OctonionMatrix, b: &OctonionMatrix, f: impl Fn(Octonion, Octonion) -> Octonion) -> OctonionMatrix {
    assert_eq!(a.shape(), b.shape(), "octonion matrix shapes differ");
    OctonionMatrix {
        rows: a.rows,
        cols: a.cols,
        entries: a.entries.iter().zip(&b.entries).map(|(&x, &y)| f(x, y)).collect(),
    }
}

impl Add for &OctonionMatrix {
    type Output = OctonionMatrix;
    fn add(self, o: &OctonionMatrix) -> OctonionMatrix {
        zip_entries(self, o, |x, y| x + y)
    }
}

impl Sub for &OctonionMatrix {
    type Output = OctonionMatrix;
    fn sub(self, o: &OctonionMatrix) -> OctonionMatrix {
        zip_entries(self, o, |x, y| x - y)
    }
}

impl fmt::Debug for OctonionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OctonionMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "\n  ")?;
            for c in 0..self.cols {
                write!(f, "[{}] ", self[(r, c)])?;
            }
        }
        write!(f, "\n]")
    }
}

impl Serialize for OctonionMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDocument {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|r| (0..self.cols).map(|c| self[(r, c)].0).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OctonionMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = MatrixDocument::deserialize(d)?;
        let text = serde_json::to_string(&doc).map_err(serde::de::Error::custom)?;
        OctonionMatrix::from_json(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests;
