//! Real eigenvalues and octonion eigenvectors of Hermitian octonion
//! matrices, read off the symmetric left adjoint.
//!
//! For Hermitian `A` the real matrix `ω(A)` is symmetric. Each of its
//! eigenpairs `(λ, x)` gives an octonion column `Y` with `vec Y = x` and
//! `AY = Yλ`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt_real;
use crate::octonion::Octonion;
use crate::omatrix::{mat_apply, OctonionMatrix};
use crate::random::{hermitian, trial_rng};
use crate::realmat::{char_poly, sym_eigen, Polynomial};

/// Largest tolerated `‖A − A*‖`, relative to the largest entry.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues sharing one cluster.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenGroup {
    /// Mean of the clustered eigenvalues.
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenReport {
    pub dimension: usize,
    /// Ascending, `8m` values.
    pub eigenvalues: Vec<f64>,
    pub group_tol: f64,
    pub groups: Vec<EigenGroup>,
    /// `m×1` columns, in the order of `eigenvalues`.
    pub eigenvectors: Vec<OctonionMatrix>,
    /// Largest `‖AY − Yλ‖` over all pairs.
    pub max_residual: f64,
}

impl EigenReport {
    /// Multiplicities in group order.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.multiplicity).collect()
    }

    /// Compact multiset label such as `6x4` or `14x2+4x1`.
    pub fn multiplicity_pattern(&self) -> String {
        multiplicity_pattern(&self.multiplicities())
    }

    /// One line per group, `value (xk)`, values rounded to 12 significant
    /// digits so clustered means read cleanly.
    pub fn summary(&self) -> String {
        let groups: Vec<String> = self
            .groups
            .iter()
            .map(|g| format!("{} (x{})", short_real(g.value), g.multiplicity))
            .collect();
        format!("{} groups: {}", self.groups.len(), groups.join(", "))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `index,eigenvalue,group` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,eigenvalue,group\n");
        let mut group = 0;
        let mut used = 0;
        for (i, v) in self.eigenvalues.iter().enumerate() {
            if used == self.groups[group].multiplicity {
                group += 1;
                used = 0;
            }
            used += 1;
            let _ = writeln!(out, "{i},{},{group}", fmt_real(*v));
        }
        out
    }
}

/// 12 significant digits, shortest form.
fn short_real(x: f64) -> String {
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    let r = if r == 0.0 { 0.0 } else { r };
    if r == 0.0 || (1e-4..1e6).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// Run-length label of a multiplicity multiset, largest multiplicity first.
pub fn multiplicity_pattern(mults: &[usize]) -> String {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &k in mults {
        *counts.entry(k).or_default() += 1;
    }
    counts
        .iter()
        .rev()
        .map(|(k, n)| format!("{n}x{k}"))
        .collect::<Vec<_>>()
        .join("+")
}

/// `max(1e-7, 1e-9·(λ_max − λ_min))`
pub fn default_group_tol(eigenvalues: &[f64]) -> f64 {
    let spread = match (eigenvalues.first(), eigenvalues.last()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => 0.0,
    };
    1e-7f64.max(1e-9 * spread)
}

/// Splits ascending values wherever consecutive gaps exceed `tol`.
pub fn group_eigenvalues(sorted: &[f64], tol: f64) -> Vec<EigenGroup> {
    let mut groups = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] - sorted[i - 1] > tol {
            let slice = &sorted[start..i];
            if !slice.is_empty() {
                groups.push(EigenGroup {
                    value: slice.iter().sum::<f64>() / slice.len() as f64,
                    multiplicity: slice.len(),
                });
            }
            start = i;
        }
    }
    groups
}

fn require_hermitian(a: &OctonionMatrix) -> Result<()> {
    let deviation = a.hermitian_deviation()?;
    if deviation > HERMITIAN_TOL * a.max_entry_norm().max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(())
}

/// Eigen-decomposition of a Hermitian `A`; `group_tol = None` picks
/// [`default_group_tol`].
pub fn hermitian_eigen(a: &OctonionMatrix, group_tol: Option<f64>) -> Result<EigenReport> {
    require_hermitian(a)?;
    let m = a.rows();
    // remove sub-tolerance asymmetry so the adjoint is exactly symmetric
    let sym = (a + &a.conj_transpose()).scale(0.5);
    let eig = sym_eigen(&sym.left_adjoint())?;
    let eigenvalues = eig.values.0.clone();
    let group_tol = group_tol.unwrap_or_else(|| default_group_tol(&eigenvalues));
    if group_tol.is_nan() || group_tol < 0.0 {
        return Err(Error::InvalidArgument(format!("group tolerance {group_tol} must be >= 0")));
    }

    let mut eigenvectors = Vec::with_capacity(8 * m);
    let mut max_residual = 0.0f64;
    for (k, &lambda) in eigenvalues.iter().enumerate() {
        let y = OctonionMatrix::unvec(m, 1, &eig.vectors.column(k))?;
        let residual = (&mat_apply(a, &y)? - &y.map(|v| v * lambda)).norm_fro();
        max_residual = max_residual.max(residual);
        eigenvectors.push(y);
    }
    Ok(EigenReport {
        dimension: m,
        groups: group_eigenvalues(&eigenvalues, group_tol),
        eigenvalues,
        group_tol,
        eigenvectors,
        max_residual,
    })
}

/// For a 2×2 Hermitian `[[a, b], [b̄, c]]`, the largest relative coefficient
/// difference between the characteristic polynomial of `ω(A)` and
/// `[(λ−a)(λ−c) − |b|²]⁸`.
pub fn two_by_two_char_poly_gap(a: &OctonionMatrix) -> Result<f64> {
    if a.shape() != (2, 2) {
        return Err(Error::DimensionMismatch(format!(
            "expected a 2x2 matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    require_hermitian(a)?;
    let (d0, d1, b): (f64, f64, Octonion) = (a[(0, 0)].re(), a[(1, 1)].re(), a[(0, 1)]);
    let quad = Polynomial::quadratic(-(d0 + d1), d0 * d1 - b.norm_sqr());
    Ok(char_poly(&a.left_adjoint())?.max_rel_diff(&quad.pow(8)))
}

/// One census trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub m: usize,
    pub trial: u64,
    pub groups: usize,
    pub multiplicity_pattern: String,
    pub max_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Census {
    pub m: usize,
    pub seed: u64,
    pub rows: Vec<CensusRow>,
    /// `(pattern, count)`, most frequent first, ties by pattern.
    pub frequencies: Vec<(String, usize)>,
}

impl Census {
    pub fn trials(&self) -> usize {
        self.rows.len()
    }

    pub fn dominant(&self) -> Option<(&str, f64)> {
        self.frequencies
            .first()
            .map(|(p, n)| (p.as_str(), *n as f64 / self.trials() as f64))
    }

    pub fn max_residual(&self) -> f64 {
        self.rows.iter().map(|r| r.max_residual).fold(0.0, f64::max)
    }

    /// `m,trial,groups,multiplicity_pattern,max_residual` with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,trial,groups,multiplicity_pattern,max_residual\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.m,
                r.trial,
                r.groups,
                r.multiplicity_pattern,
                fmt_real(r.max_residual)
            );
        }
        out
    }
}

pub const CENSUS_MIN: usize = 2;
pub const CENSUS_MAX: usize = 6;

/// Eigen-structure of `trials` random Hermitian `m×m` matrices, trial `t`
/// drawn from substream `t` of `seed`.
pub fn multiplicity_census(m: usize, trials: u64, seed: u64) -> Result<Census> {
    if !(CENSUS_MIN..=CENSUS_MAX).contains(&m) {
        return Err(Error::UnsupportedSize(format!(
            "census needs {CENSUS_MIN} <= m <= {CENSUS_MAX}, got {m}"
        )));
    }
    let mut rows = Vec::with_capacity(trials as usize);
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for trial in 0..trials {
        let a = hermitian(&mut trial_rng(seed, trial), m);
        let report = hermitian_eigen(&a, None)?;
        let pattern = report.multiplicity_pattern();
        *counts.entry(pattern.clone()).or_default() += 1;
        rows.push(CensusRow {
            m,
            trial,
            groups: report.groups.len(),
            multiplicity_pattern: pattern,
            max_residual: report.max_residual,
        });
    }
    let mut frequencies: Vec<(String, usize)> = counts.into_iter().collect();
    frequencies.sort_by(|x, y| y.1.cmp(&x.1).then_with(|| x.0.cmp(&y.0)));
    Ok(Census {
        m,
        seed,
        rows,
        frequencies,
    })
}
