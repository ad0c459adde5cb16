use serde::{Deserialize, Serialize};

/// Real polynomial with coefficients in ascending degree order
/// (`coeffs[0]` is the constant term).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    pub coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Polynomial { coeffs }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![1.0] }
    }

    /// `λ^2 + b λ + c`
    pub fn quadratic(b: f64, c: f64) -> Self {
        Polynomial {
            coeffs: vec![c, b, 1.0],
        }
    }

    /// `λ - root`
    pub fn linear(root: f64) -> Self {
        Polynomial {
            coeffs: vec![-root, 1.0],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// Coefficient-space convolution.
    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial { coeffs: Vec::new() };
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial { coeffs: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Sum of absolute coefficients.
    pub fn abs_sum(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Largest coefficientwise difference relative to `max(1, largest |coeff|)`.
    pub fn max_rel_diff(&self, other: &Self) -> f64 {
        if self.coeffs.len() != other.coeffs.len() {
            return f64::INFINITY;
        }
        let scale = self
            .coeffs
            .iter()
            .chain(&other.coeffs)
            .fold(1.0f64, |m, c| m.max(c.abs()));
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()))
            / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_expansion() {
        // (λ - 1)^3 = λ^3 - 3λ^2 + 3λ - 1
        let p = Polynomial::linear(1.0).pow(3);
        assert_eq!(p.coeffs, vec![-1.0, 3.0, -3.0, 1.0]);
        assert_eq!(p.eval(1.0), 0.0);
        assert_eq!(p.eval(3.0), 8.0);
    }

    #[test]
    fn quadratic_product() {
        let p = Polynomial::quadratic(0.0, 1.0).mul(&Polynomial::quadratic(0.0, 4.0));
        assert_eq!(p.coeffs, vec![4.0, 0.0, 5.0, 0.0, 1.0]);
        assert_eq!(p.degree(), 4);
        assert_eq!(p.leading(), 1.0);
    }
}
