//! Linear equations in one octonion unknown.
//!
//! Each equation is turned into its real 8×8 adjoint system and solved with
//! [`solve_consistent_scaled`]; that verdict is authoritative. Where a closed-form
//! solvability condition or solution is known, it is evaluated alongside and
//! reported in [`ClosedFormCheck`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::orep::{delta, mu, o_unvec, o_vec, omega};
use crate::realmat::{char_poly, solve_consistent_scaled, RealMatrix};

/// Relative tolerance for closed-form conditions.
pub const CONDITION_TOL: f64 = 1e-9;

/// Solutions of a linear equation: `particular + span(null_basis)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionSet<T> {
    pub solvable: bool,
    /// Present iff `solvable`.
    pub particular: Option<T>,
    /// Orthonormal directions of the homogeneous solution space.
    pub null_basis: Vec<T>,
    /// `‖lhs(particular) − rhs‖` when solvable, otherwise the least-squares
    /// residual of the real system.
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedFormCheck>,
}

/// A closed-form condition evaluated next to the real-system verdict.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormCheck {
    /// The condition computed directly from the coefficients.
    pub condition: bool,
    /// Whether it matches what the real system decided.
    pub agrees: bool,
    /// Worst residual of the closed-form solutions, when they apply.
    pub residual: Option<f64>,
}

impl<T> SolutionSet<T> {
    pub fn dimension(&self) -> usize {
        self.null_basis.len()
    }
}

/// Evidence for (or against) `a ∼ b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityCertificate {
    pub similar: bool,
    pub re_a: f64,
    pub re_b: f64,
    pub im_norm_a: f64,
    pub im_norm_b: f64,
}

fn scale_of(xs: &[Octonion]) -> f64 {
    xs.iter().map(|x| x.norm()).fold(1.0, f64::max)
}

/// `a ∼ b` iff the real parts and the imaginary norms coincide.
pub fn similarity_certificate(a: Octonion, b: Octonion) -> SimilarityCertificate {
    let tol = CONDITION_TOL * scale_of(&[a, b]);
    let (re_a, re_b) = (a.re(), b.re());
    let (im_norm_a, im_norm_b) = (a.im().norm(), b.im().norm());
    SimilarityCertificate {
        similar: (re_a - re_b).abs() <= tol && (im_norm_a - im_norm_b).abs() <= tol,
        re_a,
        re_b,
        im_norm_a,
        im_norm_b,
    }
}

/// Similar octonions have similar left representations; the
/// characteristic polynomials of `ω(a)` and `ω(b)` then coincide.
pub fn check_rep_similarity(a: Octonion, b: Octonion) -> bool {
    similarity_certificate(a, b).similar
}

/// Characteristic polynomials of `ω(a)` and `ω(b)` agree to `tol` (relative).
pub fn rep_char_polys_agree(a: Octonion, b: Octonion, tol: f64) -> Result<bool> {
    let pa = char_poly(&omega(a))?;
    let pb = char_poly(&omega(b))?;
    Ok(pa.max_rel_diff(&pb) <= tol)
}

fn to_octonions(vs: &[crate::realmat::RealVector]) -> Result<Vec<Octonion>> {
    vs.iter().map(o_unvec).collect()
}

/// Solves `m·vec(x) = vec(rhs)` and re-measures the residual with `lhs`.
/// `reference` bounds the size of the terms that were combined into `m`.
fn solve_system(
    m: &RealMatrix,
    reference: f64,
    rhs: Octonion,
    lhs: impl Fn(Octonion) -> Octonion,
) -> Result<SolutionSet<Octonion>> {
    let sol = solve_consistent_scaled(m, &o_vec(rhs), reference)?;
    let null_basis = to_octonions(&sol.null_basis)?;
    let particular = sol.particular.as_ref().map(o_unvec).transpose()?;
    let residual = match particular {
        Some(x) => lhs(x).dist(rhs),
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

fn require_non_real(a: Octonion, what: &str) -> Result<()> {
    if a.im().norm() <= 1e-12 * a.norm().max(1.0) {
        return Err(Error::Degenerate(format!(
            "{what}: coefficient {a} is real, so the equation has no unique structure"
        )));
    }
    Ok(())
}

/// `ax = xb`.
pub fn solve_sim(a: Octonion, b: Octonion) -> Result<SolutionSet<Octonion>> {
    let mut set = solve_system(&delta(a, b), a.norm() + b.norm(), Octonion::ZERO, |x| a * x - x * b)?;
    let cert = similarity_certificate(a, b);
    let tol = CONDITION_TOL * scale_of(&[a, b]);
    let residual_of = |v: Octonion| (a * v - v * b).norm() / v.norm();

    let residual = if !cert.similar || cert.im_norm_a <= tol {
        None
    } else if (a.im() + b.im()).norm() > tol {
        // b ≠ ā: two real parameters
        let (ia, ib) = (a.im(), b.im());
        let v1 = ia + ib;
        let v2 = Octonion::real(ia.norm() * ib.norm()) - ia * ib;
        Some([v1, v2].into_iter().filter(|v| v.norm() > tol).map(residual_of).fold(0.0, f64::max))
    } else {
        // b = ā: imaginary x orthogonal to Im a
        let ia = a.im();
        let n2 = ia.norm_sqr();
        Some(
            (1..8)
                .map(|k| Octonion::basis(k) - ia * (ia[k] / n2))
                .filter(|v| v.norm() > 1e-6)
                .map(residual_of)
                .fold(0.0, f64::max),
        )
    };
    set.closed_form = Some(ClosedFormCheck {
        condition: cert.similar,
        agrees: cert.similar == !set.null_basis.is_empty(),
        residual,
    });
    Ok(set)
}

/// `ax − xa = b`, requires `a ∉ ℝ`.
pub fn solve_commutator(a: Octonion, b: Octonion) -> Result<SolutionSet<Octonion>> {
    require_non_real(a, "ax - xa = b")?;
    let mut set = solve_system(&delta(a, a), 2.0 * a.norm(), b, |x| a * x - x * a)?;
    let condition = (a * b - b * a.conj()).norm() <= CONDITION_TOL * scale_of(&[a, b]).powi(2);
    let residual = condition.then(|| {
        let ia = a.im();
        let x = (b * a - a * b) * (0.25 / ia.norm_sqr());
        (a * x - x * a).dist(b)
    });
    set.closed_form = Some(ClosedFormCheck {
        condition,
        agrees: condition == set.solvable,
        residual,
    });
    Ok(set)
}

/// `ax − xā = b`, requires `a ∉ ℝ`.
pub fn solve_conj(a: Octonion, b: Octonion) -> Result<SolutionSet<Octonion>> {
    require_non_real(a, "ax - x conj(a) = b")?;
    let ac = a.conj();
    let mut set = solve_system(&delta(a, ac), 2.0 * a.norm(), b, |x| a * x - x * ac)?;
    let ia = a.im();
    let n2 = ia.norm_sqr();
    // Im b must be λ₁·Im a
    let lambda1 = (0..8).map(|k| b.im()[k] * ia[k]).sum::<f64>() / n2;
    let off = (b.im() - ia * lambda1).norm();
    let condition = off <= CONDITION_TOL * scale_of(&[a, b]);
    let residual = condition.then(|| {
        let x = Octonion::real(lambda1 / 2.0) - ia * (b.re() / (2.0 * n2));
        (a * x - x * ac).dist(b)
    });
    set.closed_form = Some(ClosedFormCheck {
        condition,
        agrees: condition == set.solvable,
        residual,
    });
    Ok(set)
}

/// `ax − xb = c`.
pub fn solve_sylvester(a: Octonion, b: Octonion, c: Octonion) -> Result<SolutionSet<Octonion>> {
    solve_system(&delta(a, b), a.norm() + b.norm(), c, |x| a * x - x * b)
}

/// The three associator-type equations in one unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssocForm {
    /// `a(xb) − (ax)b = c`
    Inner,
    /// `(ab)x − a(bx) = c`
    Left,
    /// `x(ab) − (xa)b = c`
    Right,
}

impl AssocForm {
    pub const ALL: [AssocForm; 3] = [AssocForm::Inner, AssocForm::Left, AssocForm::Right];

    pub fn apply(self, a: Octonion, b: Octonion, x: Octonion) -> Octonion {
        match self {
            AssocForm::Inner => a * (x * b) - (a * x) * b,
            AssocForm::Left => (a * b) * x - a * (b * x),
            AssocForm::Right => x * (a * b) - (x * a) * b,
        }
    }

    /// The real coefficient matrix: `μ(a, b)` for the first two forms and
    /// `−μ(a, b)` for the last.
    pub fn matrix(self, a: Octonion, b: Octonion) -> RealMatrix {
        match self {
            AssocForm::Inner | AssocForm::Left => mu(a, b),
            AssocForm::Right => -&mu(a, b),
        }
    }
}

impl std::str::FromStr for AssocForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inner" => Ok(AssocForm::Inner),
            "left" => Ok(AssocForm::Left),
            "right" => Ok(AssocForm::Right),
            _ => Err(Error::Parse(format!(
                "unknown associator form {s:?} (expected inner, left or right)"
            ))),
        }
    }
}

pub fn solve_assoc(form: AssocForm, a: Octonion, b: Octonion, c: Octonion) -> Result<SolutionSet<Octonion>> {
    solve_system(&form.matrix(a, b), 2.0 * a.norm() * b.norm(), c, |x| form.apply(a, b, x))
}
