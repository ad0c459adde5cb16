//! Complete invertibility, inverse operators and the Cayley–Hamilton
//! identities for octonion matrices.
//!
//! With `p(λ) = λᵗ + r_{t−1}λᵗ⁻¹ + … + r₀` the characteristic polynomial of
//! `ω(A)` (`t = 8m`), left multiplication `Y ↦ AY` is annihilated by `p`, so
//!
//! ```text
//! L_A⁻¹ ∘ B = −(1/r₀) [A^{(t−1|}B + r_{t−1}A^{(t−2|}B + … + r₁B]
//! ```
//!
//! solves `AX = B`. The mirror with right nesting solves `XA = B`.

use serde::{Deserialize, Serialize};

use super::{mat_apply, OctonionMatrix};
use crate::error::{Error, Result};
use crate::realmat::{char_poly, rank, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OperatorSide {
    /// Inverts `X ↦ AX`.
    LeftOp,
    /// Inverts `X ↦ XA`.
    RightOp,
}

fn require_square(a: &OctonionMatrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

/// `ω(A)` has full rank under the SVD rank tolerance.
pub fn is_completely_invertible(a: &OctonionMatrix) -> Result<bool> {
    require_square(a)?;
    Ok(rank(&a.left_adjoint()) == 8 * a.rows())
}

#[derive(Debug, Clone)]
pub struct InverseOperator {
    side: OperatorSide,
    source: OctonionMatrix,
    poly: Polynomial,
}

impl InverseOperator {
    /// Fails unless `a` is completely invertible.
    pub fn new(side: OperatorSide, a: &OctonionMatrix) -> Result<Self> {
        if !is_completely_invertible(a)? {
            return Err(Error::NotCompletelyInvertible);
        }
        let poly = char_poly(&a.left_adjoint())?;
        if poly.coeffs[0] == 0.0 {
            return Err(Error::NotCompletelyInvertible);
        }
        Ok(InverseOperator {
            side,
            source: a.clone(),
            poly,
        })
    }

    pub fn side(&self) -> OperatorSide {
        self.side
    }

    pub fn source(&self) -> &OctonionMatrix {
        &self.source
    }

    /// Characteristic polynomial of `ω(A)`, ascending coefficients.
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// `L_A⁻¹ ∘ B` or `B ∘ R_A⁻¹`, evaluated in Horner form and then
    /// corrected once with the same operator applied to the residual.
    pub fn apply(&self, b: &OctonionMatrix) -> Result<OctonionMatrix> {
        let m = self.source.rows();
        let conformable = match self.side {
            OperatorSide::LeftOp => b.rows() == m,
            OperatorSide::RightOp => b.cols() == m,
        };
        if !conformable {
            return Err(Error::DimensionMismatch(format!(
                "inverse operator of a {m}x{m} matrix cannot act on {}x{}",
                b.rows(),
                b.cols()
            )));
        }
        let x = self.apply_polynomial(b)?;
        let residual = b - &self.multiply(&x)?;
        Ok(&x + &self.apply_polynomial(&residual)?)
    }

    /// The polynomial formula alone, without correction.
    pub fn apply_polynomial(&self, b: &OctonionMatrix) -> Result<OctonionMatrix> {
        let r = &self.poly.coeffs;
        let t = r.len() - 1;
        let mut acc = b.clone();
        for k in (0..t - 1).rev() {
            acc = &self.multiply(&acc)? + &b.scale(r[k + 1]);
        }
        Ok(acc.scale(-1.0 / r[0]))
    }

    /// `A·Y` or `Y·A`, the map this operator inverts.
    fn multiply(&self, y: &OctonionMatrix) -> Result<OctonionMatrix> {
        match self.side {
            OperatorSide::LeftOp => mat_apply(&self.source, y),
            OperatorSide::RightOp => mat_apply(y, &self.source),
        }
    }
}

/// `X` with `XA = I`.
pub fn left_inverse(a: &OctonionMatrix) -> Result<OctonionMatrix> {
    InverseOperator::new(OperatorSide::RightOp, a)?.apply(&OctonionMatrix::identity(a.rows()))
}

/// `X` with `AX = I`.
pub fn right_inverse(a: &OctonionMatrix) -> Result<OctonionMatrix> {
    InverseOperator::new(OperatorSide::LeftOp, a)?.apply(&OctonionMatrix::identity(a.rows()))
}

/// Residuals of `p(A) = 0` with left- and right-nested powers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CayleyHamilton {
    pub poly: Polynomial,
    /// Largest entry norm of `A^{(t|} + … + r₁A + r₀I`.
    pub left: f64,
    /// Same with right-nested powers.
    pub right: f64,
    /// `Σ|rᵢ|`
    pub coeff_scale: f64,
}

impl CayleyHamilton {
    pub fn within(&self, rel_tol: f64) -> bool {
        let bound = rel_tol * self.coeff_scale;
        self.left <= bound && self.right <= bound
    }
}

const CAYLEY_HAMILTON_MAX: usize = 3;

pub fn cayley_hamilton_residuals(a: &OctonionMatrix) -> Result<CayleyHamilton> {
    require_square(a)?;
    let m = a.rows();
    if m > CAYLEY_HAMILTON_MAX {
        return Err(Error::UnsupportedSize(format!(
            "Cayley-Hamilton check supports m <= {CAYLEY_HAMILTON_MAX}, got {m}"
        )));
    }
    let poly = char_poly(&a.left_adjoint())?;
    let id = OctonionMatrix::identity(m);
    let r = &poly.coeffs;
    let mut left = id.clone();
    let mut right = id.clone();
    for k in (0..r.len() - 1).rev() {
        left = &mat_apply(a, &left)? + &id.scale(r[k]);
        right = &mat_apply(&right, a)? + &id.scale(r[k]);
    }
    Ok(CayleyHamilton {
        coeff_scale: poly.abs_sum(),
        left: left.max_entry_norm(),
        right: right.max_entry_norm(),
        poly,
    })
}
