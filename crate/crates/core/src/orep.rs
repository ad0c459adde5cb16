//! Real 8×8 matrix representations of octonion multiplication.
//!
//! `omega(a)` acts as left multiplication and `nu(a)` as right
//! multiplication on coefficient vectors:
//! `vec(ax) = omega(a) vec(x)` and `vec(xa) = nu(a) vec(x)`.
//! Entry `(r, c)` of either matrix is `±a[r ^ c]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::realmat::{Polynomial, RealMatrix, RealVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepKind {
    Left,
    Right,
}

const OMEGA_SIGN: [[i8; 8]; 8] = [
    [1, -1, -1, -1, -1, -1, -1, -1],
    [1, 1, -1, 1, -1, 1, 1, -1],
    [1, 1, 1, -1, -1, -1, 1, 1],
    [1, -1, 1, 1, -1, 1, -1, 1],
    [1, 1, 1, 1, 1, -1, -1, -1],
    [1, -1, 1, -1, 1, 1, 1, -1],
    [1, -1, -1, 1, 1, -1, 1, 1],
    [1, 1, -1, -1, 1, 1, -1, 1],
];

const NU_SIGN: [[i8; 8]; 8] = [
    [1, -1, -1, -1, -1, -1, -1, -1],
    [1, 1, 1, -1, 1, -1, -1, 1],
    [1, -1, 1, 1, 1, 1, -1, -1],
    [1, 1, -1, 1, 1, -1, 1, -1],
    [1, -1, -1, -1, 1, 1, 1, 1],
    [1, 1, -1, 1, -1, 1, -1, 1],
    [1, 1, 1, -1, -1, 1, 1, -1],
    [1, -1, 1, 1, -1, -1, 1, 1],
];

fn from_pattern(sign: &[[i8; 8]; 8], a: Octonion) -> RealMatrix {
    RealMatrix::from_fn(8, 8, |r, c| f64::from(sign[r][c]) * a[r ^ c])
}

/// Left representation: `vec(ax) = ω(a)·vec(x)`.
pub fn omega(a: Octonion) -> RealMatrix {
    from_pattern(&OMEGA_SIGN, a)
}

/// Right representation: `vec(xa) = ν(a)·vec(x)`.
pub fn nu(a: Octonion) -> RealMatrix {
    from_pattern(&NU_SIGN, a)
}

pub fn rep(kind: RepKind, a: Octonion) -> RealMatrix {
    match kind {
        RepKind::Left => omega(a),
        RepKind::Right => nu(a),
    }
}

/// `diag(1, -1, ..., -1)`, which links the two representations through
/// `ν(a) = K₈ ωᵀ(a) K₈`.
pub fn k8() -> RealMatrix {
    let mut d = [-1.0; 8];
    d[0] = 1.0;
    RealMatrix::from_diagonal(&d)
}

pub fn o_vec(x: Octonion) -> RealVector {
    RealVector(x.0.to_vec())
}

pub fn o_unvec(v: &RealVector) -> Result<Octonion> {
    let arr: [f64; 8] = v.as_slice().try_into().map_err(|_| {
        Error::DimensionMismatch(format!("octonion vector needs 8 entries, got {}", v.dim()))
    })?;
    Ok(Octonion(arr))
}

/// Rebuilds an octonion from its left representation as
/// `(1/8) Σ_{r,c} W[r][c] · e_r · conj(e_c)`, using octonion products only.
pub fn reconstruct_from_left(w: &RealMatrix) -> Result<Octonion> {
    if w.rows() != 8 || w.cols() != 8 {
        return Err(Error::DimensionMismatch(format!(
            "expected an 8x8 matrix, got {}x{}",
            w.rows(),
            w.cols()
        )));
    }
    let mut total = Octonion::ZERO;
    for c in 0..8 {
        let mut column = Octonion::ZERO;
        for r in 0..8 {
            column += Octonion::basis(r) * w[(r, c)];
        }
        total += column * Octonion::basis(c).conj();
    }
    Ok(total * 0.125)
}

/// `ω(a) − ν(b)`: the coefficient matrix of `x ↦ ax − xb`.
pub fn delta(a: Octonion, b: Octonion) -> RealMatrix {
    &omega(a) - &nu(b)
}

/// Parameters shared by the closed forms for `δ(a, b)`.
struct DeltaParams {
    s: f64,
    im_a: f64,
    im_b: f64,
    im_sum: f64,
}

impl DeltaParams {
    fn new(a: Octonion, b: Octonion) -> Self {
        DeltaParams {
            s: a.re() - b.re(),
            im_a: a.im().norm(),
            im_b: b.im().norm(),
            im_sum: (a.im() + b.im()).norm(),
        }
    }
}

/// Both closed-form determinants of `δ(a, b)`:
/// the factored form `|a − b̄|⁴ [s² + (|Im a| − |Im b|)²] [s² + (|Im a| + |Im b|)²]`
/// and the expanded form
/// `(s² + |Im a + Im b|²)² [s⁴ + 2s²(|Im a|² + |Im b|²) + (|Im a|² − |Im b|²)²]`,
/// with `s = Re a − Re b`.
pub fn delta_det_closed(a: Octonion, b: Octonion) -> (f64, f64) {
    let DeltaParams { s, im_a, im_b, im_sum } = DeltaParams::new(a, b);
    let s2 = s * s;
    let dist2 = (a - b.conj()).norm_sqr();
    let factored = dist2 * dist2 * (s2 + (im_a - im_b).powi(2)) * (s2 + (im_a + im_b).powi(2));
    let q = s2 + im_sum * im_sum;
    let (a2, b2) = (im_a * im_a, im_b * im_b);
    let expanded = q * q * (s2 * s2 + 2.0 * s2 * (a2 + b2) + (a2 - b2).powi(2));
    (factored, expanded)
}

/// Characteristic polynomial of `δ(a, b)` as a product of four quadratics in
/// `λ − s`, expanded by convolution.
pub fn delta_char_poly(a: Octonion, b: Octonion) -> Polynomial {
    let DeltaParams { s, im_a, im_b, im_sum } = DeltaParams::new(a, b);
    // (λ - s)² + r² = λ² - 2sλ + s² + r²
    let shifted = |r: f64| Polynomial::quadratic(-2.0 * s, s * s + r * r);
    let first = shifted(im_sum);
    first
        .mul(&first)
        .mul(&shifted(im_a - im_b))
        .mul(&shifted(im_a + im_b))
}

/// `ω(a)ν(b) − ν(b)ω(a)`: the coefficient matrix of `x ↦ (ab)x − a(bx)`.
pub fn mu(a: Octonion, b: Octonion) -> RealMatrix {
    let w = omega(a);
    let n = nu(b);
    &(&w * &n) - &(&n * &w)
}

/// Representation of `a⁻¹`, which is the matrix inverse of the
/// representation of `a`.
pub fn rep_inverse(kind: RepKind, a: Octonion) -> Result<RealMatrix> {
    Ok(rep(kind, a.inv()?))
}
