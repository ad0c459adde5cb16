//! Linear octonion matrix equations and their real adjoint systems.

use super::kron::{block_identity, block_kron_left, block_kron_right};
use super::{mat_apply, OctonionMatrix};
use crate::error::{Error, Result};
use crate::olinsolve::SolutionSet;
use crate::realmat::{solve_consistent_scaled, RealMatrix};

/// A linear equation in one octonion matrix unknown `X`.
///
/// Every form is rewritten as `M·vec X = vec(rhs)` where `M` is built from
/// block Kronecker products of left and right adjoints.
#[derive(Debug, Clone, Copy)]
pub enum MatrixEquation<'a> {
    /// `AX = B`
    LeftMul { a: &'a OctonionMatrix, rhs: &'a OctonionMatrix },
    /// `XA = B`
    RightMul { a: &'a OctonionMatrix, rhs: &'a OctonionMatrix },
    /// `(AX)B = C`
    OuterProduct {
        a: &'a OctonionMatrix,
        b: &'a OctonionMatrix,
        rhs: &'a OctonionMatrix,
    },
    /// `A(XB) = C`
    InnerProduct {
        a: &'a OctonionMatrix,
        b: &'a OctonionMatrix,
        rhs: &'a OctonionMatrix,
    },
    /// `AX − XB = C`
    Sylvester {
        a: &'a OctonionMatrix,
        b: &'a OctonionMatrix,
        rhs: &'a OctonionMatrix,
    },
    /// `(AX)A − A(XA) = B`
    Associator { a: &'a OctonionMatrix, rhs: &'a OctonionMatrix },
}

fn mismatch(what: &str) -> Error {
    Error::DimensionMismatch(what.to_string())
}

impl<'a> MatrixEquation<'a> {
    pub fn rhs(&self) -> &'a OctonionMatrix {
        match *self {
            MatrixEquation::LeftMul { rhs, .. }
            | MatrixEquation::RightMul { rhs, .. }
            | MatrixEquation::OuterProduct { rhs, .. }
            | MatrixEquation::InnerProduct { rhs, .. }
            | MatrixEquation::Sylvester { rhs, .. }
            | MatrixEquation::Associator { rhs, .. } => rhs,
        }
    }

    /// Shape of `X`, after checking every coefficient is conformable.
    pub fn unknown_shape(&self) -> Result<(usize, usize)> {
        let (cr, cc) = self.rhs().shape();
        match *self {
            MatrixEquation::LeftMul { a, .. } => {
                if a.rows() != cr {
                    return Err(mismatch("AX = B needs A and B with equal row counts"));
                }
                Ok((a.cols(), cc))
            }
            MatrixEquation::RightMul { a, .. } => {
                if a.cols() != cc {
                    return Err(mismatch("XA = B needs A and B with equal column counts"));
                }
                Ok((cr, a.rows()))
            }
            MatrixEquation::OuterProduct { a, b, .. } | MatrixEquation::InnerProduct { a, b, .. } => {
                if a.rows() != cr || b.cols() != cc {
                    return Err(mismatch("product equation: A rows / B cols must match C"));
                }
                Ok((a.cols(), b.rows()))
            }
            MatrixEquation::Sylvester { a, b, .. } => {
                if !a.is_square() || !b.is_square() || a.rows() != cr || b.rows() != cc {
                    return Err(mismatch("AX - XB = C needs square A (rows of C) and B (cols of C)"));
                }
                Ok((cr, cc))
            }
            MatrixEquation::Associator { a, .. } => {
                if !a.is_square() || (cr, cc) != a.shape() {
                    return Err(mismatch("(AX)A - A(XA) = B needs square A and B of the same shape"));
                }
                Ok((cr, cc))
            }
        }
    }

    /// Left-hand side evaluated in octonion arithmetic.
    pub fn apply(&self, x: &OctonionMatrix) -> Result<OctonionMatrix> {
        match *self {
            MatrixEquation::LeftMul { a, .. } => mat_apply(a, x),
            MatrixEquation::RightMul { a, .. } => mat_apply(x, a),
            MatrixEquation::OuterProduct { a, b, .. } => mat_apply(&mat_apply(a, x)?, b),
            MatrixEquation::InnerProduct { a, b, .. } => mat_apply(a, &mat_apply(x, b)?),
            MatrixEquation::Sylvester { a, b, .. } => Ok(&mat_apply(a, x)? - &mat_apply(x, b)?),
            MatrixEquation::Associator { a, .. } => {
                Ok(&mat_apply(&mat_apply(a, x)?, a)? - &mat_apply(a, &mat_apply(x, a)?)?)
            }
        }
    }

    /// The real coefficient matrix acting on `vec X`.
    pub fn system(&self) -> Result<RealMatrix> {
        let (xr, xc) = self.unknown_shape()?;
        let m = match *self {
            MatrixEquation::LeftMul { a, .. } => block_kron_left(&block_identity(xc), &a.left_adjoint())?,
            MatrixEquation::RightMul { a, .. } => block_kron_left(&a.right_adjoint(), &block_identity(xr))?,
            MatrixEquation::OuterProduct { a, b, .. } => {
                block_kron_left(&b.right_adjoint(), &a.left_adjoint())?
            }
            MatrixEquation::InnerProduct { a, b, .. } => {
                block_kron_right(&a.left_adjoint(), &b.right_adjoint())?
            }
            MatrixEquation::Sylvester { a, b, .. } => {
                &block_kron_left(&block_identity(xc), &a.left_adjoint())?
                    - &block_kron_left(&b.right_adjoint(), &block_identity(xr))?
            }
            MatrixEquation::Associator { a, .. } => {
                let (w, v) = (a.left_adjoint(), a.right_adjoint());
                &block_kron_left(&v, &w)? - &block_kron_right(&w, &v)?
            }
        };
        Ok(m)
    }

    /// Size of the terms combined into [`system`](Self::system).
    fn reference_scale(&self) -> f64 {
        let w = |m: &OctonionMatrix| m.left_adjoint().norm_fro();
        let v = |m: &OctonionMatrix| m.right_adjoint().norm_fro();
        match *self {
            MatrixEquation::LeftMul { a, .. } => w(a),
            MatrixEquation::RightMul { a, .. } => v(a),
            MatrixEquation::OuterProduct { a, b, .. } | MatrixEquation::InnerProduct { a, b, .. } => w(a) * v(b),
            MatrixEquation::Sylvester { a, b, .. } => w(a) + v(b),
            MatrixEquation::Associator { a, .. } => 2.0 * w(a) * v(a),
        }
    }

    /// Solves through the real system. Inconsistent systems are reported as
    /// unsolvable, never replaced by a least-squares answer.
    pub fn solve(&self) -> Result<SolutionSet<OctonionMatrix>> {
        let (xr, xc) = self.unknown_shape()?;
        let rhs = self.rhs();
        let sol = solve_consistent_scaled(&self.system()?, &rhs.vec(), self.reference_scale())?;
        let null_basis = sol
            .null_basis
            .iter()
            .map(|v| OctonionMatrix::unvec(xr, xc, v))
            .collect::<Result<Vec<_>>>()?;
        let particular = sol
            .particular
            .as_ref()
            .map(|v| OctonionMatrix::unvec(xr, xc, v))
            .transpose()?;
        let residual = match &particular {
            Some(x) => (&self.apply(x)? - rhs).norm_fro(),
            None => sol.residual,
        };
        Ok(SolutionSet {
            solvable: particular.is_some(),
            particular,
            null_basis,
            residual,
            closed_form: None,
        })
    }
}
