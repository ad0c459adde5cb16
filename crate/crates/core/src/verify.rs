//! Seeded invariant suites.
//!
//! Every suite draws trial `t` from substream `t` of the run seed, evaluates
//! a fixed list of identities, and keeps the worst relative residual and the
//! failure count per identity.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt_real;
use crate::octonion::{associator, Octonion};
use crate::oeigen::{hermitian_eigen, multiplicity_census, two_by_two_char_poly_gap};
use crate::olinsolve::{
    similarity_certificate, solve_assoc, solve_commutator, solve_conj, solve_sim, solve_sylvester, AssocForm,
    SolutionSet,
};
use crate::omatrix::{
    block_identity, block_kron_left, block_kron_right, cayley_hamilton_residuals, is_completely_invertible,
    left_inverse, mat_apply, nested_left, nested_right, right_inverse, InverseOperator, MatrixEquation,
    OctonionMatrix, OperatorSide,
};
use crate::orep::{delta, delta_char_poly, delta_det_closed, k8, nu, o_vec, omega, rep_inverse, RepKind};
use crate::quaternion::{diagonal_similarity_defect, Quaternion};
use crate::random::{hermitian, octonion, octonion_matrix, trial_rng, uniform, unit_entry_matrix};
use crate::realmat::{char_poly, determinant, rank, RealMatrix, RealVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OctonionLaws,
    QuaternionReps,
    RepIdentities,
    DeltaFormulas,
    ScalarSolvers,
    VecCalculus,
    InverseOperators,
    CayleyHamilton,
    EigMultiplicity,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::OctonionLaws,
        Suite::QuaternionReps,
        Suite::RepIdentities,
        Suite::DeltaFormulas,
        Suite::ScalarSolvers,
        Suite::VecCalculus,
        Suite::InverseOperators,
        Suite::CayleyHamilton,
        Suite::EigMultiplicity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OctonionLaws => "octonion-laws",
            Suite::QuaternionReps => "quaternion-reps",
            Suite::RepIdentities => "rep-identities",
            Suite::DeltaFormulas => "delta-formulas",
            Suite::ScalarSolvers => "scalar-solvers",
            Suite::VecCalculus => "vec-calculus",
            Suite::InverseOperators => "inverse-operators",
            Suite::CayleyHamilton => "cayley-hamilton",
            Suite::EigMultiplicity => "eig-multiplicity",
        }
    }

    pub fn run(self, cfg: &VerifyConfig) -> Result<VerifySuiteResult> {
        if cfg.trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        let mut ck = Checker::new(cfg.tol);
        for trial in 0..cfg.trials {
            let mut rng = trial_rng(cfg.seed, trial);
            match self {
                Suite::OctonionLaws => octonion_laws(&mut ck, &mut rng)?,
                Suite::QuaternionReps => quaternion_reps(&mut ck, &mut rng),
                Suite::RepIdentities => rep_identities(&mut ck, &mut rng)?,
                Suite::DeltaFormulas => delta_formulas(&mut ck, &mut rng)?,
                Suite::ScalarSolvers => scalar_solvers(&mut ck, &mut rng, trial)?,
                Suite::VecCalculus => vec_calculus(&mut ck, &mut rng)?,
                Suite::InverseOperators => inverse_operators(&mut ck, &mut rng)?,
                Suite::CayleyHamilton => cayley_hamilton(&mut ck, &mut rng)?,
                Suite::EigMultiplicity => eig_multiplicity(&mut ck, &mut rng)?,
            }
        }
        let mut measurements = Vec::new();
        match self {
            Suite::DeltaFormulas => delta_fixed(&mut ck)?,
            Suite::RepIdentities => {
                let d = determinant(&omega(Octonion::ONE + Octonion::basis(1)))?;
                ck.check("det-omega-one-plus-e1", (d - 16.0).abs(), 1.0, 1e-10);
            }
            Suite::InverseOperators => inverse_fixed(&mut ck)?,
            Suite::EigMultiplicity => {
                for m in [4, 5] {
                    measurements.push(census_measurement(m, cfg.trials, cfg.seed)?);
                }
            }
            _ => {}
        }
        Ok(ck.finish(self.name(), cfg, measurements))
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// `all` or a single suite name.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![s.parse()?])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub trials: u64,
    pub seed: u64,
    /// Replaces every per-identity tolerance when set.
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityStat {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
    /// Largest residual divided by its scale.
    pub worst_residual: f64,
    pub tol: f64,
}

/// A recorded observation that never counts as a failure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Measurement {
    pub label: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySuiteResult {
    pub suite: String,
    pub trials: u64,
    pub failures: u64,
    pub worst_residual: f64,
    pub seed: u64,
    pub identities: Vec<IdentityStat>,
    pub measurements: Vec<Measurement>,
}

impl VerifySuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityStat> {
        self.identities.iter().find(|s| s.name == name)
    }

    /// Header line, one line per identity, one per measurement.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {} seed {} trials {}: {} failures, worst residual {}",
            self.suite,
            self.seed,
            self.trials,
            self.failures,
            fmt_real(self.worst_residual)
        );
        for s in &self.identities {
            let _ = writeln!(
                out,
                "  {:<32} checks {:>6}  failures {:>4}  worst {}  tol {}",
                s.name,
                s.checks,
                s.failures,
                fmt_real(s.worst_residual),
                fmt_real(s.tol)
            );
        }
        for m in &self.measurements {
            let _ = writeln!(out, "  measured {}: {}", m.label, m.value);
        }
        out
    }
}

struct Checker {
    tol_override: Option<f64>,
    stats: Vec<IdentityStat>,
}

impl Checker {
    fn new(tol_override: Option<f64>) -> Self {
        Checker {
            tol_override,
            stats: Vec::new(),
        }
    }

    /// Fails when `residual > tol·scale`, or when either is not finite.
    fn check(&mut self, name: &str, residual: f64, scale: f64, tol: f64) {
        let tol = self.tol_override.unwrap_or(tol);
        let scale = scale.max(f64::MIN_POSITIVE);
        let rel = residual / scale;
        let idx = match self.stats.iter().position(|s| s.name == name) {
            Some(i) => i,
            None => {
                self.stats.push(IdentityStat {
                    name: name.to_string(),
                    checks: 0,
                    failures: 0,
                    worst_residual: 0.0,
                    tol,
                });
                self.stats.len() - 1
            }
        };
        let stat = &mut self.stats[idx];
        stat.checks += 1;
        if rel.is_nan() || rel > tol {
            stat.failures += 1;
        }
        stat.worst_residual = if rel.is_nan() { f64::NAN } else { stat.worst_residual.max(rel) };
    }

    /// Pass/fail check, immune to the tolerance override.
    fn check_true(&mut self, name: &str, ok: bool) {
        let saved = self.tol_override.take();
        self.check(name, if ok { 0.0 } else { 1.0 }, 1.0, 0.0);
        self.tol_override = saved;
    }

    fn finish(self, suite: &str, cfg: &VerifyConfig, measurements: Vec<Measurement>) -> VerifySuiteResult {
        VerifySuiteResult {
            suite: suite.to_string(),
            trials: cfg.trials,
            failures: self.stats.iter().map(|s| s.failures).sum(),
            worst_residual: self.stats.iter().map(|s| s.worst_residual).fold(0.0, f64::max),
            seed: cfg.seed,
            identities: self.stats,
            measurements,
        }
    }
}

fn mat_gap(x: &RealMatrix, y: &RealMatrix) -> f64 {
    x.max_abs_diff(y)
}

fn vec_gap(x: &RealVector, y: &RealVector) -> f64 {
    x.max_abs_diff(y)
}

const LAW_TOL: f64 = 1e-10;

fn octonion_laws(ck: &mut Checker, rng: &mut impl Rng) -> Result<()> {
    let (a, b, x) = (octonion(rng), octonion(rng), octonion(rng));
    let (na, nb, nx) = (a.norm(), b.norm(), x.norm());
    let s2 = (1.0 + na) * (1.0 + nb);
    let s3 = s2 * (1.0 + nx);
    let s4 = s3 * (1.0 + na);

    ck.check("norm-multiplicative", ((a * b).norm() - na * nb).abs(), s2, LAW_TOL);
    let quad = a * a - a * (2.0 * a.re()) + Octonion::real(a.norm_sqr());
    ck.check("quadratic-identity", quad.norm(), (1.0 + na).powi(2), LAW_TOL);
    ck.check("conjugate-reverses-product", (a * b).conj().dist(b.conj() * a.conj()), s2, LAW_TOL);
    ck.check("real-part-commutes", ((a * b).re() - (b * a).re()).abs(), s2, LAW_TOL);
    ck.check("real-part-associates", (((a * x) * b).re() - (a * (x * b)).re()).abs(), s3, LAW_TOL);
    ck.check("moufang-middle", ((a * b) * (x * a)).dist((a * (b * x)) * a), s4, LAW_TOL);
    let bs4 = s3 * (1.0 + nb);
    ck.check("moufang-middle-mirror", ((b * x) * (a * b)).dist((b * (x * a)) * b), bs4, LAW_TOL);
    let aba = Octonion::sandwich(a, b);
    ck.check("moufang-left", (aba * x).dist(a * (b * (a * x))), s4, LAW_TOL);
    ck.check("moufang-right", (x * aba).dist(((x * a) * b) * a), s4, LAW_TOL);
    let assoc = associator(a, b, x);
    ck.check("associator-swap-last", (assoc + associator(a, x, b)).norm(), s3, LAW_TOL);
    ck.check("associator-cyclic", assoc.dist(associator(x, a, b)), s3, LAW_TOL);
    ck.check("flexible", ((a * b) * a).dist(a * (b * a)), s3, LAW_TOL);
    ck.check("inverse", (a * a.inv()?).dist(Octonion::ONE), 1.0, 1e-12);
    Ok(())
}

fn quaternion(rng: &mut impl Rng) -> Quaternion {
    Quaternion::new(uniform(rng), uniform(rng), uniform(rng), uniform(rng))
}

fn quaternion_reps(ck: &mut Checker, rng: &mut impl Rng) {
    let (a, b, x) = (quaternion(rng), quaternion(rng), quaternion(rng));
    let s2 = (1.0 + a.norm()) * (1.0 + b.norm());
    let s3 = s2 * (1.0 + x.norm());
    ck.check("phi-additive", mat_gap(&(a + b).phi(), &(&a.phi() + &b.phi())), 1.0, 0.0);
    ck.check("phi-conjugate-transpose", mat_gap(&a.conj().phi(), &a.phi().transpose()), 1.0, 0.0);
    ck.check("tau-conjugate-transpose", mat_gap(&a.conj().tau(), &a.tau().transpose()), 1.0, 0.0);
    ck.check("phi-multiplicative", mat_gap(&(a * b).phi(), &(&a.phi() * &b.phi())), s2, 1e-12);
    ck.check("tau-antimultiplicative", mat_gap(&(a * b).tau(), &(&b.tau() * &a.tau())), s2, 1e-12);
    ck.check("phi-tau-commute", mat_gap(&(&a.phi() * &b.tau()), &(&b.tau() * &a.phi())), s2, 1e-12);
    let lhs = (a * x * b).to_vec();
    let rhs = (&a.phi() * &b.tau()).mat_vec(&x.to_vec()).expect("4x4 times 4");
    ck.check("vec-sandwich", vec_gap(&lhs, &rhs), s3, 1e-12);
    ck.check("unitary-diagonal-similarity", diagonal_similarity_defect(a), 1.0 + a.norm(), 1e-12);
}

fn rep_identities(ck: &mut Checker, rng: &mut impl Rng) -> Result<()> {
    let (a, b) = (octonion(rng), octonion(rng));
    let (wa, wb, na, nb) = (omega(a), omega(b), nu(a), nu(b));
    let s2 = (1.0 + a.norm()) * (1.0 + b.norm());
    let s3 = s2 * (1.0 + a.norm());
    let (ab, ba) = (a * b, b * a);
    let t = LAW_TOL;

    ck.check("omega-conjugate-transpose", mat_gap(&omega(a.conj()), &wa.transpose()), 1.0, 0.0);
    ck.check("nu-conjugate-transpose", mat_gap(&nu(a.conj()), &na.transpose()), 1.0, 0.0);
    let k = k8();
    ck.check("nu-from-omega", mat_gap(&na, &(&(&k * &wa.transpose()) * &k)), 1.0, 0.0);
    let n8 = a.norm().powi(8);
    ck.check("det-omega", (determinant(&wa)? - n8).abs(), n8.max(1e-300), 1e-8);
    ck.check("det-nu", (determinant(&na)? - n8).abs(), n8.max(1e-300), 1e-8);
    ck.check("omega-square", mat_gap(&omega(a * a), &(&wa * &wa)), s2, t);
    ck.check("nu-square", mat_gap(&nu(a * a), &(&na * &na)), s2, t);
    ck.check("omega-nu-commute", mat_gap(&(&wa * &na), &(&na * &wa)), s2, t);
    let aba = Octonion::sandwich(a, b);
    ck.check("omega-sandwich", mat_gap(&omega(aba), &(&(&wa * &wb) * &wa)), s3, t);
    ck.check("nu-sandwich", mat_gap(&nu(aba), &(&(&na * &nb) * &na)), s3, t);
    ck.check(
        "omega-symmetrized-product",
        mat_gap(&(&omega(ab) + &omega(ba)), &(&(&wa * &wb) + &(&wb * &wa))),
        s2,
        t,
    );
    ck.check(
        "nu-symmetrized-product",
        mat_gap(&(&nu(ab) + &nu(ba)), &(&(&na * &nb) + &(&nb * &na))),
        s2,
        t,
    );
    ck.check(
        "omega-plus-nu-of-product",
        mat_gap(&(&omega(ab) + &nu(ab)), &(&(&wa * &wb) + &(&nb * &na))),
        s2,
        t,
    );
    ck.check(
        "crossed-commutators",
        mat_gap(&(&(&wa * &nb) + &(&wb * &na)), &(&(&na * &wb) + &(&nb * &wa))),
        s2,
        t,
    );
    let split_w = &(&(&wa * &wb) + &(&wa * &nb)) - &(&nb * &wa);
    ck.check("omega-of-product-split", mat_gap(&omega(ab), &split_w), s2, t);
    let split_n = &(&(&nb * &na) + &(&wb * &na)) - &(&na * &wb);
    ck.check("nu-of-product-split", mat_gap(&nu(ab), &split_n), s2, t);
    ck.check(
        "omega-product-intertwined",
        mat_gap(&(&omega(ab) * &na), &(&(&na * &wa) * &wb)),
        s3,
        t,
    );
    let s3b = s2 * (1.0 + b.norm());
    ck.check(
        "nu-product-intertwined",
        mat_gap(&(&nu(ab) * &wb), &(&(&wb * &nb) * &na)),
        s3b,
        t,
    );
    if a.norm() > 1e-3 && b.norm() > 1e-3 {
        let conj = &(&rep_inverse(RepKind::Right, a)? * &omega(ab)) * &na;
        ck.check("omega-product-similarity", mat_gap(&conj, &(&wa * &wb)), s2 / a.norm(), 1e-9);
        let conj = &(&rep_inverse(RepKind::Left, b)? * &nu(ab)) * &wb;
        ck.check("nu-product-similarity", mat_gap(&conj, &(&nb * &na)), s2 / b.norm(), 1e-9);
    }
    let d = delta(a, b);
    let dt = d.transpose();
    ck.check("delta-normal", mat_gap(&(&d * &dt), &(&dt * &d)), s2 * s2, t);
    Ok(())
}

fn delta_formulas(ck: &mut Checker, rng: &mut impl Rng) -> Result<()> {
    let (a, b) = (octonion(rng), octonion(rng));
    let direct = determinant(&delta(a, b))?;
    let (factored, expanded) = delta_det_closed(a, b);
    let scale = direct.abs().max(factored.abs()).max(1e-300);
    ck.check("det-factored-vs-direct", (factored - direct).abs(), scale, 1e-8);
    ck.check("det-expanded-vs-direct", (expanded - direct).abs(), scale, 1e-8);
    ck.check("det-factored-vs-expanded", (factored - expanded).abs(), scale, 1e-8);
    let gap = delta_char_poly(a, b).max_rel_diff(&char_poly(&delta(a, b))?);
    ck.check("char-poly-closed-vs-leverrier", gap, 1.0, 1e-7);

    let im2 = a.im().norm_sqr();
    let d = delta(a, a);
    let s3 = (2.0 * a.norm()).powi(3).max(1.0);
    ck.check("delta-cube", mat_gap(&d.pow(3)?, &d.scale(-4.0 * im2)), s3, 1e-9);
    let g = d.scale(-1.0 / (4.0 * im2));
    let ggap = mat_gap(&(&(&d * &g) * &d), &d);
    ck.check("delta-generalized-inverse", ggap, (2.0 * a.norm()).max(1.0), 1e-9);
    Ok(())
}

fn delta_fixed(ck: &mut Checker) -> Result<()> {
    let e = Octonion::basis;
    ck.check_true("rank-delta-e1-e2-is-6", rank(&delta(e(1), e(2))) == 6);
    Ok(())
}

fn solution_gap(set: &SolutionSet<Octonion>, truth: Octonion) -> f64 {
    let Some(p) = set.particular else {
        return f64::INFINITY;
    };
    let mut diff = o_vec(truth - p);
    for h in &set.null_basis {
        let hv = o_vec(*h);
        diff = diff.axpy(-diff.dot(&hv), &hv);
    }
    diff.norm()
}

fn round_trip(ck: &mut Checker, name: &str, set: &SolutionSet<Octonion>, truth: Octonion, scale: f64) {
    ck.check_true(&format!("{name}-solvable"), set.solvable);
    ck.check(&format!("{name}-residual"), set.residual, scale, 1e-9);
    ck.check(&format!("{name}-recovers-truth"), solution_gap(set, truth), 1.0 + truth.norm(), 1e-8);
}

fn closed_form(ck: &mut Checker, name: &str, set: &SolutionSet<Octonion>, scale: f64) {
    if let Some(cf) = set.closed_form {
        ck.check_true(&format!("{name}-closed-form-agrees"), cf.agrees);
        if let Some(r) = cf.residual {
            ck.check(&format!("{name}-closed-form-residual"), r, scale, 1e-9);
        }
    }
}

fn scalar_solvers(ck: &mut Checker, rng: &mut impl Rng, trial: u64) -> Result<()> {
    let (a, b, x) = (octonion(rng), octonion(rng), octonion(rng));
    let p = octonion(rng);
    let noise = octonion(rng);
    let s = (1.0 + a.norm()) * (1.0 + b.norm()) * (1.0 + x.norm());

    let set = solve_sylvester(a, b, a * x - x * b)?;
    round_trip(ck, "sylvester", &set, x, s);

    // alternate similar and generic pairs
    let partner = if trial.is_multiple_of(2) { (p * a) * p.inv()? } else { b };
    let set = solve_sim(a, partner)?;
    ck.check("sim-residual", set.residual, s, 1e-9);
    closed_form(ck, "sim", &set, 1.0);
    let similar = similarity_certificate(a, partner).similar;
    let (factored, _) = delta_det_closed(a, partner);
    let singular = factored.abs() <= 1e-12 * (a.norm() + partner.norm()).powi(8);
    ck.check_true("sim-condition-iff-det-zero", similar == singular);

    let set = solve_commutator(a, a * x - x * a)?;
    round_trip(ck, "commutator", &set, x, s);
    closed_form(ck, "commutator", &set, s);
    closed_form(ck, "commutator-generic", &solve_commutator(a, noise)?, s);

    let ac = a.conj();
    let set = solve_conj(a, a * x - x * ac)?;
    round_trip(ck, "conj", &set, x, s);
    closed_form(ck, "conj", &set, s);
    closed_form(ck, "conj-generic", &solve_conj(a, noise)?, s);

    for form in AssocForm::ALL {
        let name = match form {
            AssocForm::Inner => "assoc-inner",
            AssocForm::Left => "assoc-left",
            AssocForm::Right => "assoc-right",
        };
        let set = solve_assoc(form, a, b, form.apply(a, b, x))?;
        round_trip(ck, name, &set, x, s * (1.0 + a.norm()));
    }
    Ok(())
}

fn dims(rng: &mut impl Rng) -> [usize; 4] {
    std::array::from_fn(|_| rng.random_range(1..=3))
}

fn vec_calculus(ck: &mut Checker, rng: &mut impl Rng) -> Result<()> {
    let [m, n, p, q] = dims(rng);
    let a = octonion_matrix(rng, m, n);
    let x = octonion_matrix(rng, n, p);
    let b = octonion_matrix(rng, p, q);
    let sa = octonion_matrix(rng, n, n);
    let sb = octonion_matrix(rng, p, p);
    let col = octonion_matrix(rng, m, 1);
    let y = octonion_matrix(rng, q, n);
    let (s, k) = (octonion(rng), rng.random_range(1..=3usize));
    let scale = (1.0 + a.norm_fro()) * (1.0 + x.norm_fro()) * (1.0 + b.norm_fro());
    let t = LAW_TOL;
    let gap = |lhs: &OctonionMatrix, op: &RealMatrix, v: &OctonionMatrix| -> Result<f64> {
        Ok(vec_gap(&lhs.vec(), &op.mat_vec(&v.vec())?))
    };

    let sc = OctonionMatrix::scalar(s);
    ck.check(
        "vec-column-times-scalar",
        vec_gap(&mat_apply(&col, &sc)?.vec(), &col.left_adjoint().mat_vec(&o_vec(s))?),
        scale,
        t,
    );
    let op = block_kron_left(&nu(s), &block_identity(q * n))?;
    ck.check("vec-matrix-times-scalar", gap(&y.map(|v| v * s), &op, &y)?, scale, t);
    ck.check(
        "vec-matrix-times-column",
        vec_gap(
            &mat_apply(&a, &x)?.vec(),
            &block_kron_left(&block_identity(p), &a.left_adjoint())?.mat_vec(&x.vec())?,
        ),
        scale,
        t,
    );
    ck.check(
        "vec-right-multiplication",
        gap(&mat_apply(&x, &b)?, &block_kron_left(&b.right_adjoint(), &block_identity(n))?, &x)?,
        scale,
        t,
    );
    ck.check(
        "vec-outer-product",
        gap(
            &mat_apply(&mat_apply(&a, &x)?, &b)?,
            &block_kron_left(&b.right_adjoint(), &a.left_adjoint())?,
            &x,
        )?,
        scale,
        t,
    );
    ck.check(
        "vec-inner-product",
        gap(
            &mat_apply(&a, &mat_apply(&x, &b)?)?,
            &block_kron_right(&a.left_adjoint(), &b.right_adjoint())?,
            &x,
        )?,
        scale,
        t,
    );
    let pow_scale = (1.0 + sa.norm_fro()).powi(k as i32) * (1.0 + x.norm_fro());
    let wk = sa.left_adjoint().pow(k)?;
    ck.check(
        "vec-nested-left-power",
        gap(&nested_left(&sa, &x, k)?, &block_kron_left(&block_identity(p), &wk)?, &x)?,
        pow_scale,
        t,
    );
    let vk = sb.right_adjoint().pow(k)?;
    let pow_scale = (1.0 + sb.norm_fro()).powi(k as i32) * (1.0 + x.norm_fro());
    ck.check(
        "vec-nested-right-power",
        gap(&nested_right(&x, &sb, k)?, &block_kron_left(&vk, &block_identity(n))?, &x)?,
        pow_scale,
        t,
    );

    // adjoint algebra
    let a2 = octonion_matrix(rng, m, n);
    ck.check(
        "adjoint-additive",
        mat_gap(&(&a + &a2).left_adjoint(), &(&a.left_adjoint() + &a2.left_adjoint())),
        1.0,
        0.0,
    );
    ck.check(
        "adjoint-homogeneous",
        mat_gap(&a.scale(2.0).left_adjoint(), &a.left_adjoint().scale(2.0)),
        1.0,
        0.0,
    );
    ck.check(
        "adjoint-conjugate-transpose",
        mat_gap(&a.conj_transpose().left_adjoint(), &a.left_adjoint().transpose()),
        1.0,
        0.0,
    );
    let (kn, km) = (OctonionMatrix::k_block(n), OctonionMatrix::k_block(m));
    ck.check(
        "right-adjoint-from-left",
        mat_gap(&a.right_adjoint(), &(&(&kn * &a.left_adjoint().transpose()) * &km)),
        1.0,
        0.0,
    );

    // every matrix equation equals its real system
    let equations = [
        (MatrixEquation::LeftMul { a: &a, rhs: &mat_apply(&a, &x)? }, x.clone(), "system-left-mul"),
        (MatrixEquation::RightMul { a: &sa, rhs: &y }, y.clone(), "system-right-mul"),
    ];
    for (eq, v, name) in &equations {
        ck.check(name, gap(&eq.apply(v)?, &eq.system()?, v)?, scale, t);
    }
    let c = mat_apply(&mat_apply(&a, &x)?, &b)?;
    let eqs = [
        (MatrixEquation::OuterProduct { a: &a, b: &b, rhs: &c }, &x, "system-outer-product"),
        (MatrixEquation::InnerProduct { a: &a, b: &b, rhs: &c }, &x, "system-inner-product"),
    ];
    for (eq, v, name) in &eqs {
        ck.check(name, gap(&eq.apply(v)?, &eq.system()?, v)?, scale, t);
    }
    let syl_rhs = OctonionMatrix::zeros(n, p);
    let eq = MatrixEquation::Sylvester { a: &sa, b: &sb, rhs: &syl_rhs };
    ck.check("system-sylvester", gap(&eq.apply(&x)?, &eq.system()?, &x)?, scale, t);
    let xs = octonion_matrix(rng, n, n);
    let zero = OctonionMatrix::zeros(n, n);
    let eq = MatrixEquation::Associator { a: &sa, rhs: &zero };
    let assoc_scale = (1.0 + sa.norm_fro()).powi(2) * (1.0 + xs.norm_fro());
    ck.check("system-associator", gap(&eq.apply(&xs)?, &eq.system()?, &xs)?, assoc_scale, t);
    Ok(())
}

/// Unit-entry `m×m` matrix, redrawn until completely invertible.
fn invertible(rng: &mut impl Rng, m: usize) -> Result<OctonionMatrix> {
    loop {
        let a = unit_entry_matrix(rng, m, m);
        if is_completely_invertible(&a)? {
            return Ok(a);
        }
    }
}

fn inverse_operators(ck: &mut Checker, rng: &mut impl Rng) -> Result<()> {
    let a = invertible(rng, 2)?;
    let b = octonion_matrix(rng, 2, 2);
    let id = OctonionMatrix::identity(2);
    let l = InverseOperator::new(OperatorSide::LeftOp, &a)?;
    let r = InverseOperator::new(OperatorSide::RightOp, &a)?;
    let t = 1e-8;
    ck.check("left-op-then-multiply", mat_apply(&a, &l.apply(&b)?)?.max_entry_dist(&b), 1.0, t);
    ck.check("left-op-of-a-is-identity", l.apply(&a)?.max_entry_dist(&id), 1.0, t);
    ck.check("multiply-then-right-op", mat_apply(&r.apply(&b)?, &a)?.max_entry_dist(&b), 1.0, t);
    ck.check("right-op-of-a-is-identity", r.apply(&a)?.max_entry_dist(&id), 1.0, t);
    ck.check("left-cancellation", l.apply(&mat_apply(&a, &b)?)?.max_entry_dist(&b), 1.0, t);
    ck.check("right-cancellation", r.apply(&mat_apply(&b, &a)?)?.max_entry_dist(&b), 1.0, t);
    ck.check("left-inverse", mat_apply(&left_inverse(&a)?, &a)?.max_entry_dist(&id), 1.0, t);
    ck.check("right-inverse", mat_apply(&a, &right_inverse(&a)?)?.max_entry_dist(&id), 1.0, t);

    let s = octonion(rng);
    let li = left_inverse(&OctonionMatrix::scalar(s))?;
    let want = s.conj().scale(1.0 / s.norm_sqr());
    ck.check("scalar-left-inverse", li[(0, 0)].dist(want), want.norm().max(1.0), 1e-12);
    Ok(())
}

fn inverse_fixed(ck: &mut Checker) -> Result<()> {
    let e1 = Octonion::basis(1);
    let li = left_inverse(&OctonionMatrix::scalar(Octonion::ONE + e1))?;
    ck.check("one-plus-e1-inverse", li[(0, 0)].dist((Octonion::ONE - e1).scale(0.5)), 1.0, 1e-12);
    Ok(())
}

fn cayley_hamilton(ck: &mut Checker, rng: &mut impl Rng) -> Result<()> {
    for (m, name) in [(1, "m1"), (2, "m2"), (3, "m3")] {
        let a = unit_entry_matrix(rng, m, m);
        let ch = cayley_hamilton_residuals(&a)?;
        ck.check(&format!("left-nested-{name}"), ch.left, ch.coeff_scale, 1e-6);
        ck.check(&format!("right-nested-{name}"), ch.right, ch.coeff_scale, 1e-6);
    }
    Ok(())
}

fn eig_multiplicity(ck: &mut Checker, rng: &mut impl Rng) -> Result<()> {
    for m in [2usize, 3] {
        let a = hermitian(rng, m);
        let r = hermitian_eigen(&a, None)?;
        let want = if m == 2 { "2x8" } else { "6x4" };
        ck.check_true(&format!("m{m}-pattern-{want}"), r.multiplicity_pattern() == want);
        let size = a.norm_fro().max(1.0);
        ck.check(&format!("m{m}-residual"), r.max_residual, size, 1e-8);
        let trace: f64 = r.eigenvalues.iter().sum();
        let diag: f64 = (0..m).map(|s| a[(s, s)].re()).sum();
        ck.check(&format!("m{m}-trace"), (trace - 8.0 * diag).abs(), 8.0 * size, 1e-8);
        let w = a.left_adjoint();
        let worst = r
            .eigenvectors
            .iter()
            .zip(&r.eigenvalues)
            .map(|(y, l)| {
                let v = y.vec();
                w.mat_vec(&v).map(|wv| vec_gap(&wv, &v.scale(*l)))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        ck.check(&format!("m{m}-real-eigenvector"), worst, size, 1e-8);
        if m == 2 {
            ck.check("m2-char-poly-closed", two_by_two_char_poly_gap(&a)?, 1.0, 1e-7);
        }
    }
    Ok(())
}

fn census_measurement(m: usize, trials: u64, seed: u64) -> Result<Measurement> {
    let census = multiplicity_census(m, trials, seed)?;
    let n = census.trials() as f64;
    let freqs: Vec<String> = census
        .frequencies
        .iter()
        .map(|(p, c)| format!("{p} {}/{} ({:.0}%)", c, census.trials(), 100.0 * *c as f64 / n))
        .collect();
    Ok(Measurement {
        label: format!("m{m}-census"),
        value: format!("{}; max residual {}", freqs.join(", "), fmt_real(census.max_residual())),
    })
}
