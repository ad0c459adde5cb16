use super::{Polynomial, RealMatrix};
use crate::error::{Error, Result};

/// Largest order handled by plain Faddeev–LeVerrier; above this the matrix is
/// balanced first.
const UNBALANCED_MAX_ORDER: usize = 24;
const MAX_ORDER: usize = 64;

/// Monic characteristic polynomial `det(λI - A)` by the Faddeev–LeVerrier
/// recursion.
///
/// Orders 25..=64 are balanced by a diagonal similarity first; larger orders
/// are rejected.
pub fn char_poly(a: &RealMatrix) -> Result<Polynomial> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize(format!(
            "characteristic polynomial of order {n} (max {MAX_ORDER})"
        )));
    }
    if n > UNBALANCED_MAX_ORDER {
        let (balanced, _) = balance(a)?;
        return Ok(faddeev_leverrier(&balanced));
    }
    Ok(faddeev_leverrier(a))
}

/// The recursion `M₁ = I`, `c_{n−k} = −tr(A M_k)/k`, `M_{k+1} = A M_k + c_{n−k} I`,
/// carried out in double-double arithmetic. The trace cancellations that make
/// the plain recursion lose digits on ill-conditioned inputs are absorbed by
/// the extra precision; coefficients are rounded to `f64` at the end.
fn faddeev_leverrier(a: &RealMatrix) -> Polynomial {
    let n = a.rows();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut m: Vec<Dd> = (0..n * n)
        .map(|i| if i % (n + 1) == 0 { Dd::ONE } else { Dd::ZERO })
        .collect();
    let mut am = vec![Dd::ZERO; n * n];
    for k in 1..=n {
        for i in 0..n {
            let row = a.row(i);
            for j in 0..n {
                let mut acc = Dd::ZERO;
                for (l, &ail) in row.iter().enumerate() {
                    if ail != 0.0 {
                        acc = acc.add(m[l * n + j].mul_f64(ail));
                    }
                }
                am[i * n + j] = acc;
            }
        }
        let mut tr = Dd::ZERO;
        for i in 0..n {
            tr = tr.add(am[i * n + i]);
        }
        let c = tr.div_f64(-(k as f64));
        coeffs[n - k] = c.hi + c.lo;
        if k < n {
            std::mem::swap(&mut m, &mut am);
            for i in 0..n {
                m[i * n + i] = m[i * n + i].add(c);
            }
        }
    }
    Polynomial::new(coeffs)
}

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Clone, Copy, Debug)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        Dd {
            hi: s,
            lo: (a - (s - bb)) + (b - bb),
        }
    }

    fn fast_two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd { hi: s, lo: b - (s - a) }
    }

    fn add(self, o: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, o.hi);
        let t = Dd::two_sum(self.lo, o.lo);
        let u = Dd::fast_two_sum(s.hi, s.lo + t.hi);
        Dd::fast_two_sum(u.hi, u.lo + t.lo)
    }

    fn mul_f64(self, b: f64) -> Dd {
        let p = self.hi * b;
        let e = self.hi.mul_add(b, -p);
        Dd::fast_two_sum(p, e + self.lo * b)
    }

    fn div_f64(self, b: f64) -> Dd {
        let q1 = self.hi / b;
        let r = self.add(Dd::from(q1).mul_f64(-b));
        let q2 = r.hi / b;
        Dd::fast_two_sum(q1, q2)
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }
}

/// Parlett–Reinsch balancing: returns `(D⁻¹AD, diag(D))` with power-of-two
/// scalings, so eigenvalues are preserved exactly.
pub fn balance(a: &RealMatrix) -> Result<(RealMatrix, Vec<f64>)> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut b = a.clone();
    let mut d = vec![1.0; n];
    let radix = 2.0f64;
    loop {
        let mut converged = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += b[(j, i)].abs();
                    r += b[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut cc = c;
            let mut g = r / radix;
            while cc < g {
                f *= radix;
                cc *= radix * radix;
            }
            g = r * radix;
            while cc > g {
                f /= radix;
                cc /= radix * radix;
            }
            if (cc + r / f) / f < 0.95 * s {
                converged = false;
                d[i] *= f;
                for j in 0..n {
                    b[(i, j)] /= f;
                }
                for j in 0..n {
                    b[(j, i)] *= f;
                }
            }
        }
        if converged {
            break;
        }
    }
    Ok((b, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realmat::determinant;

    #[test]
    fn double_double_primitives() {
        let third = Dd::ONE.div_f64(3.0);
        let back = third.mul_f64(3.0);
        assert!((back.hi - 1.0).abs() + back.lo.abs() < 1e-30);
        let tiny = Dd::from(1.0).add(Dd::from(1e-20));
        assert_eq!(tiny.hi, 1.0);
        assert_eq!(tiny.lo, 1e-20);
    }

    #[test]
    fn identity_gives_binomial() {
        let p = char_poly(&RealMatrix::identity(8)).unwrap();
        let expected = Polynomial::linear(1.0).pow(8);
        assert!(p.max_rel_diff(&expected) < 1e-14);
    }

    #[test]
    fn companion_matrix_round_trip() {
        // companion of λ^3 - 6λ^2 + 11λ - 6
        let c = RealMatrix::from_rows(&[
            vec![0.0, 0.0, 6.0],
            vec![1.0, 0.0, -11.0],
            vec![0.0, 1.0, 6.0],
        ])
        .unwrap();
        let p = char_poly(&c).unwrap();
        assert!(p.max_rel_diff(&Polynomial::new(vec![-6.0, 11.0, -6.0, 1.0])) < 1e-13);
    }

    #[test]
    fn constant_and_trace_terms() {
        let a = RealMatrix::from_fn(6, 6, |r, c| ((r * 7 + c * 3) % 5) as f64 - 2.0 + 0.1 * r as f64);
        let p = char_poly(&a).unwrap();
        assert!((p.coeffs[5] + a.trace()).abs() < 1e-10);
        let det = determinant(&a).unwrap();
        assert!((p.coeffs[0] - det).abs() < 1e-8 * det.abs().max(1.0));
    }

    #[test]
    fn balancing_preserves_the_polynomial() {
        let mut a = RealMatrix::from_fn(30, 30, |r, c| {
            if r == c {
                (r % 3) as f64 - 1.0
            } else {
                0.01 * ((r * 13 + c * 7) % 11) as f64 - 0.05
            }
        });
        a[(0, 29)] = 1e3;
        a[(29, 0)] = 1e-3;
        let (b, d) = balance(&a).unwrap();
        assert!(d.iter().all(|x| x.log2().fract() == 0.0));
        assert!((b.trace() - a.trace()).abs() < 1e-12);
        let p = char_poly(&a).unwrap();
        assert_eq!(p.degree(), 30);
        assert_eq!(p.leading(), 1.0);
        assert!((p.coeffs[29] + a.trace()).abs() < 1e-9);
    }

    #[test]
    fn rejects_oversize_and_rectangular() {
        assert!(matches!(
            char_poly(&RealMatrix::zeros(65, 65)),
            Err(Error::UnsupportedSize(_))
        ));
        assert!(matches!(char_poly(&RealMatrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
    }
}
