use super::{RealMatrix, RealVector};
use crate::error::{Error, Result};

const JACOBI_MAX_SWEEPS: usize = 100;

fn require_square(a: &RealMatrix) -> Result<usize> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

/// Determinant by LU factorisation with partial pivoting.
pub fn determinant(a: &RealMatrix) -> Result<f64> {
    let n = require_square(a)?;
    let mut lu = a.clone();
    let mut det = 1.0;
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&i, &j| lu[(i, k)].abs().total_cmp(&lu[(j, k)].abs()))
            .unwrap_or(k);
        let pivot = lu[(pivot_row, k)];
        if pivot == 0.0 {
            return Ok(0.0);
        }
        if pivot_row != k {
            for c in 0..n {
                let tmp = lu[(k, c)];
                lu[(k, c)] = lu[(pivot_row, c)];
                lu[(pivot_row, c)] = tmp;
            }
            det = -det;
        }
        det *= pivot;
        for r in k + 1..n {
            let f = lu[(r, k)] / pivot;
            if f == 0.0 {
                continue;
            }
            for c in k + 1..n {
                lu[(r, c)] -= f * lu[(k, c)];
            }
        }
    }
    if !det.is_finite() {
        return Err(Error::NonFinite("determinant"));
    }
    Ok(det)
}

/// Eigen-decomposition of a symmetric matrix.
#[derive(Clone, Debug)]
pub struct SymEigen {
    /// Ascending.
    pub values: RealVector,
    /// Orthonormal eigenvectors stored as columns, in the order of `values`.
    pub vectors: RealMatrix,
}

/// Symmetric eigensolver using cyclic Jacobi rotations.
///
/// Sweeps until the off-diagonal Frobenius norm drops to `1e-12 * ‖A‖_F`.
pub fn sym_eigen(a: &RealMatrix) -> Result<SymEigen> {
    let n = require_square(a)?;
    let asym = a.asymmetry()?;
    if asym > 1e-12 * a.norm_inf().max(f64::MIN_POSITIVE) {
        return Err(Error::NotSymmetric { asymmetry: asym });
    }
    let mut m = a.clone();
    // symmetrise away the tolerated rounding noise
    for r in 0..n {
        for c in r + 1..n {
            let avg = 0.5 * (m[(r, c)] + m[(c, r)]);
            m[(r, c)] = avg;
            m[(c, r)] = avg;
        }
    }
    let mut v = RealMatrix::identity(n);
    let target = 1e-12 * a.norm_fro();

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&m) <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                m[(p, q)] = 0.0;
                m[(q, p)] = 0.0;
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].total_cmp(&m[(j, j)]));
    let values = RealVector(order.iter().map(|&i| m[(i, i)]).collect());
    let vectors = RealMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(SymEigen { values, vectors })
}

fn off_diagonal_norm(m: &RealMatrix) -> f64 {
    let n = m.rows();
    let mut s = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += m[(r, c)] * m[(r, c)];
            }
        }
    }
    s.sqrt()
}

/// Thin singular value decomposition `A = U diag(σ) Vᵀ` with `k = min(m, n)`
/// singular values in descending order.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: RealMatrix,
    pub sigma: Vec<f64>,
    pub v: RealMatrix,
}

/// One-sided (Hestenes) Jacobi SVD.
///
/// Column pairs of `A V` are rotated until mutually orthogonal to working
/// precision; singular values are the resulting column norms. Unlike an
/// eigensolve of `AᵀA` this keeps small singular values accurate to
/// `eps * σ_max`, which the rank decisions depend on.
pub fn svd(a: &RealMatrix) -> Svd {
    if a.rows() < a.cols() {
        let t = svd(&a.transpose());
        return Svd {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        };
    }
    let (m, n) = (a.rows(), a.cols());
    let mut cols: Vec<Vec<f64>> = (0..n).map(|c| (0..m).map(|r| a[(r, c)]).collect()).collect();
    let mut vcols: Vec<Vec<f64>> = (0..n)
        .map(|c| (0..n).map(|r| if r == c { 1.0 } else { 0.0 }).collect())
        .collect();

    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|x| x * x).sum();
                let beta: f64 = cols[q].iter().map(|x| x * x).sum();
                let gamma: f64 = cols[p].iter().zip(&cols[q]).map(|(x, y)| x * y).sum();
                if gamma == 0.0 || gamma.abs() <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (lo, hi) = cols.split_at_mut(q);
                rotate(&mut lo[p], &mut hi[0], c, s);
                let (lo, hi) = vcols.split_at_mut(q);
                rotate(&mut lo[p], &mut hi[0], c, s);
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: Vec<f64> = cols
        .iter()
        .map(|c| c.iter().map(|x| x * x).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));

    let sigma: Vec<f64> = order.iter().map(|&i| norms[i]).collect();
    let u = RealMatrix::from_fn(m, n, |r, c| {
        let s = norms[order[c]];
        if s > 0.0 {
            cols[order[c]][r] / s
        } else {
            0.0
        }
    });
    let v = RealMatrix::from_fn(n, n, |r, c| vcols[order[c]][r]);
    Svd { u, sigma, v }
}

fn rotate(x: &mut [f64], y: &mut [f64], c: f64, s: f64) {
    for (a, b) in x.iter_mut().zip(y.iter_mut()) {
        let (xa, yb) = (*a, *b);
        *a = c * xa - s * yb;
        *b = s * xa + c * yb;
    }
}

/// Rank cutoff `1e-10 * max(rows, cols) * σ_max`.
pub fn rank_tolerance(rows: usize, cols: usize, sigma_max: f64) -> f64 {
    1e-10 * rows.max(cols) as f64 * sigma_max
}

/// Number of singular values above [`rank_tolerance`].
pub fn rank(a: &RealMatrix) -> usize {
    rank_from_svd(&svd(a), a.rows(), a.cols(), 0.0)
}

/// `σ_max`, or `reference` when that is larger.
fn cutoff_scale(d: &Svd, reference: f64) -> f64 {
    d.sigma.first().copied().unwrap_or(0.0).max(reference)
}

fn rank_from_svd(d: &Svd, rows: usize, cols: usize, reference: f64) -> usize {
    let tol = rank_tolerance(rows, cols, cutoff_scale(d, reference));
    d.sigma.iter().filter(|&&s| s > tol && s > 0.0).count()
}

/// Moore–Penrose pseudoinverse; singular values at or below the rank
/// tolerance are treated as zero.
pub fn pseudo_inverse(a: &RealMatrix) -> RealMatrix {
    pinv_from_svd(&svd(a), a.rows(), a.cols(), 0.0)
}

fn pinv_from_svd(d: &Svd, rows: usize, cols: usize, reference: f64) -> RealMatrix {
    let tol = rank_tolerance(rows, cols, cutoff_scale(d, reference));
    // A⁺ = V Σ⁺ Uᵀ
    let mut out = RealMatrix::zeros(cols, rows);
    for (l, &s) in d.sigma.iter().enumerate() {
        if s <= tol || s == 0.0 {
            continue;
        }
        let inv = 1.0 / s;
        for i in 0..cols {
            let vi = d.v[(i, l)] * inv;
            if vi == 0.0 {
                continue;
            }
            for j in 0..rows {
                out[(i, j)] += vi * d.u[(j, l)];
            }
        }
    }
    out
}

/// Result of solving `A x = b` through the pseudoinverse.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    /// `A⁺ b`, present iff the system is consistent.
    pub particular: Option<RealVector>,
    /// Orthonormal basis of the null space of `A`.
    pub null_basis: Vec<RealVector>,
    /// `‖A A⁺ b - b‖`
    pub residual: f64,
    pub rank: usize,
}

impl LinearSolution {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }
}

/// Solves `A x = b` when consistent and always reports the null space.
///
/// Consistency: `‖A A⁺ b − b‖ ≤ 1e-9 (‖b‖ + ‖A‖_F ‖A⁺ b‖)`. The null basis is
/// obtained by Gram–Schmidt over the columns of the projector `I − A⁺A` in
/// ascending index order, so it is deterministic.
pub fn solve_consistent(a: &RealMatrix, b: &RealVector) -> Result<LinearSolution> {
    solve_consistent_scaled(a, b, 0.0)
}

/// Like [`solve_consistent`], but singular values are judged against
/// `max(σ_max, reference)`. A matrix assembled as a difference of products
/// of magnitude `reference` that cancels to rounding noise then counts as
/// zero instead of as full rank, and a residual below `1e-13·reference`
/// is accepted as consistent.
pub fn solve_consistent_scaled(a: &RealMatrix, b: &RealVector, reference: f64) -> Result<LinearSolution> {
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "system matrix has {} rows, right-hand side has dim {}",
            a.rows(),
            b.dim()
        )));
    }
    let n = a.cols();
    let d = svd(a);
    let pinv = pinv_from_svd(&d, a.rows(), a.cols(), reference);
    let x = pinv.mat_vec(b)?;
    let ax = a.mat_vec(&x)?;
    let residual = (&ax - b).norm();
    // a rhs that is roundoff against the reference still counts as reachable
    let tol = 1e-9 * (b.norm() + a.norm_fro() * x.norm()) + 1e-13 * reference;
    let consistent = residual <= tol;

    let projector = &RealMatrix::identity(n) - &(&pinv * a);
    let rank = rank_from_svd(&d, a.rows(), a.cols(), reference);
    let nullity = n - rank;
    let null_basis = projector_basis(&projector, nullity);

    Ok(LinearSolution {
        particular: consistent.then_some(x),
        null_basis,
        residual,
        rank,
    })
}

fn projector_basis(p: &RealMatrix, wanted: usize) -> Vec<RealVector> {
    let n = p.rows();
    let mut basis: Vec<RealVector> = Vec::with_capacity(wanted);
    for i in 0..n {
        if basis.len() == wanted {
            break;
        }
        let mut v = p.column(i);
        // two passes of modified Gram–Schmidt
        for _ in 0..2 {
            for b in &basis {
                let d = v.dot(b);
                v = v.axpy(-d, b);
            }
        }
        let norm = v.norm();
        if norm > 1e-6 {
            basis.push(v.scale(1.0 / norm));
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lcg_matrix(rows: usize, cols: usize, seed: u64) -> RealMatrix {
        let mut s = seed.wrapping_add(0x9E3779B97F4A7C15);
        RealMatrix::from_fn(rows, cols, |_, _| {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            (s >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        })
    }

    /// Laplace expansion along the first row.
    fn cofactor_det(a: &RealMatrix) -> f64 {
        let n = a.rows();
        if n == 1 {
            return a[(0, 0)];
        }
        (0..n)
            .map(|j| {
                let minor = RealMatrix::from_fn(n - 1, n - 1, |r, c| {
                    a[(r + 1, if c < j { c } else { c + 1 })]
                });
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * a[(0, j)] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn determinant_of_identity_and_cofactor_oracle() {
        assert_eq!(determinant(&RealMatrix::identity(8)).unwrap(), 1.0);
        for seed in 0..20 {
            let a = lcg_matrix(4, 4, seed);
            let d = determinant(&a).unwrap();
            let oracle = cofactor_det(&a);
            assert!((d - oracle).abs() <= 1e-10 * oracle.abs().max(1e-3), "{d} vs {oracle}");
        }
        assert!(determinant(&RealMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn sym_eigen_diagonal() {
        let e = sym_eigen(&RealMatrix::from_diagonal(&[3.0, 1.0])).unwrap();
        assert_eq!(e.values.0, vec![1.0, 3.0]);
    }

    #[test]
    fn sym_eigen_residual_and_orthogonality() {
        for seed in 0..10 {
            let b = lcg_matrix(8, 8, seed);
            let a = &b + &b.transpose();
            let e = sym_eigen(&a).unwrap();
            let lhs = &a * &e.vectors;
            let rhs = &e.vectors * &RealMatrix::from_diagonal(&e.values.0);
            assert!(lhs.max_abs_diff(&rhs) <= 1e-9 * a.norm_inf());
            let vtv = &e.vectors.transpose() * &e.vectors;
            assert!(vtv.max_abs_diff(&RealMatrix::identity(8)) <= 1e-10);
            assert!(e.values.0.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn sym_eigen_rejects_asymmetric() {
        let a = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(sym_eigen(&a), Err(Error::NotSymmetric { .. })));
    }

    fn penrose_defect(a: &RealMatrix, p: &RealMatrix) -> f64 {
        let apa = &(a * p) * a;
        let pap = &(p * a) * p;
        let ap = a * p;
        let pa = p * a;
        let scale = 1.0 + a.max_abs() * p.max_abs() * a.rows().max(a.cols()) as f64;
        [
            apa.max_abs_diff(a) / (a.max_abs().max(1e-300) * scale),
            pap.max_abs_diff(p) / (p.max_abs().max(1e-300) * scale),
            ap.max_abs_diff(&ap.transpose()) / scale,
            pa.max_abs_diff(&pa.transpose()) / scale,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    #[test]
    fn pseudo_inverse_identity_and_rank_deficient() {
        let i8 = RealMatrix::identity(8);
        assert!(pseudo_inverse(&i8).max_abs_diff(&i8) < 1e-15);
        for seed in 0..20 {
            // rank 5 product of 8x5 and 5x8 factors
            let l = lcg_matrix(8, 5, seed);
            let r = lcg_matrix(5, 8, seed + 1000);
            let a = &l * &r;
            assert_eq!(rank(&a), 5);
            let p = pseudo_inverse(&a);
            assert!(penrose_defect(&a, &p) < 1e-8);
        }
    }

    #[test]
    fn svd_reconstructs_wide_and_tall() {
        for (r, c) in [(5, 3), (3, 5), (8, 8)] {
            let a = lcg_matrix(r, c, 42);
            let d = svd(&a);
            let k = d.sigma.len();
            let rebuilt = RealMatrix::from_fn(r, c, |i, j| {
                (0..k).map(|l| d.u[(i, l)] * d.sigma[l] * d.v[(j, l)]).sum()
            });
            assert!(rebuilt.max_abs_diff(&a) < 1e-13);
            assert!(d.sigma.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(rank(&RealMatrix::zeros(4, 4)), 0);
        assert_eq!(rank(&RealMatrix::identity(8)), 8);
    }

    #[test]
    fn consistent_solve_identity() {
        let v = RealVector((0..8).map(|i| i as f64).collect());
        let s = solve_consistent(&RealMatrix::identity(8), &v).unwrap();
        assert!(s.particular.unwrap().max_abs_diff(&v) < 1e-15);
        assert!(s.null_basis.is_empty());
    }

    #[test]
    fn inconsistent_system_is_flagged() {
        let a = RealMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let s = solve_consistent(&a, &RealVector(vec![1.0, 1.0])).unwrap();
        assert!(!s.is_consistent());
        assert_eq!(s.null_basis, vec![RealVector(vec![0.0, 1.0])]);
        assert!(solve_consistent(&a, &RealVector(vec![1.0])).is_err());
    }
}
