//! The `octo` command line.
//!
//! Exit codes: 0 success, 1 verification failures, 2 parse or usage errors,
//! 3 shape, degenerate or non-Hermitian input, 4 unsolvable equation.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::format::fmt_real;
use crate::octonion::Octonion;
use crate::oeigen::{hermitian_eigen, multiplicity_census};
use crate::olinsolve::{
    solve_assoc, solve_commutator, solve_conj, solve_sim, solve_sylvester, AssocForm, SolutionSet,
};
use crate::omatrix::{MatrixEquation, OctonionMatrix};
use crate::orep::{rep, RepKind};
use crate::realmat::RealMatrix;
use crate::verify::{parse_suites, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_UNSOLVABLE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "octo", version, about = "Octonion arithmetic, representations, equation solvers and spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiply two octonion literals.
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Print the 8x8 left or right representation of an octonion.
    Rep {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Solve a linear equation in one octonion unknown.
    Solve(SolveArgs),
    /// Solve a linear octonion matrix equation read from JSON files.
    Matsolve(MatsolveArgs),
    /// Eigenvalues of a Hermitian octonion matrix, or a multiplicity census.
    Eig(EigArgs),
    /// Run seeded invariant suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EquationArg {
    /// ax = xb
    Sim,
    /// ax - xa = b
    Commutator,
    /// ax - x conj(a) = b
    Conj,
    /// ax - xb = c
    Sylvester,
    /// associator form chosen by --form, equal to c
    Assoc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormArg {
    /// a(xb) - (ax)b
    Inner,
    /// (ab)x - a(bx)
    Left,
    /// x(ab) - (xa)b
    Right,
}

impl From<FormArg> for AssocForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Inner => AssocForm::Inner,
            FormArg::Left => AssocForm::Left,
            FormArg::Right => AssocForm::Right,
        }
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(value_enum)]
    equation: EquationArg,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, value_enum, default_value = "inner")]
    form: FormArg,
}

const MATRIX_FORMS: [&str; 6] = ["AX=B", "XA=B", "AXB=C-left", "AXB=C-right", "AX-XB=C", "assoc"];

#[derive(Debug, Args)]
struct MatsolveArgs {
    /// AX=B, XA=B, AXB=C-left for (AX)B, AXB=C-right for A(XB), AX-XB=C, or
    /// assoc for (AX)A - A(XA).
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(MATRIX_FORMS))]
    eq: String,
    #[arg(long)]
    a: PathBuf,
    #[arg(long)]
    b: Option<PathBuf>,
    #[arg(long)]
    rhs: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct EigArgs {
    /// Hermitian matrix in the JSON matrix format.
    #[arg(long, required_unless_present = "census", conflicts_with = "census")]
    input: Option<PathBuf>,
    #[arg(long)]
    group_tol: Option<f64>,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    /// Census of random m x m Hermitian matrices instead of one input.
    #[arg(long)]
    census: Option<usize>,
    #[arg(long, default_value_t = 50)]
    trials: u64,
    #[arg(long, env = "OCTO_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, env = "OCTO_SEED", default_value_t = 0)]
    seed: u64,
    /// Replaces every per-identity tolerance.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Library(Error),
    Unsolvable(String),
    VerifyFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Library(Error::Parse(_) | Error::InvalidArgument(_)) => EXIT_USAGE,
            Failure::Library(_) => EXIT_INPUT,
            Failure::Unsolvable(_) => EXIT_UNSOLVABLE,
            Failure::VerifyFailed => EXIT_VERIFY_FAILED,
        }
    }

    fn message(&self) -> Option<String> {
        match self {
            Failure::Usage(m) | Failure::Unsolvable(m) => Some(m.clone()),
            Failure::Library(e) => Some(e.to_string()),
            Failure::VerifyFailed => None,
        }
    }
}

type CliResult = std::result::Result<String, Failure>;

/// Parses `args` (program name first), writes data to `out` and diagnostics
/// to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let (result, stdout) = match cli.command {
        Command::Verify(args) => cmd_verify(&args),
        other => {
            let r = dispatch(other);
            match r {
                Ok(text) => (Ok(()), text),
                Err(f) => (Err(f), String::new()),
            }
        }
    };
    let _ = out.write_all(stdout.as_bytes());
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            if let Some(m) = f.message() {
                let _ = writeln!(err, "octo: {m}");
            }
            f.code()
        }
    }
}

fn dispatch(command: Command) -> CliResult {
    match command {
        Command::Mul { a, b } => cmd_mul(&a, &b),
        Command::Rep { kind, a } => cmd_rep(kind, &a),
        Command::Solve(args) => cmd_solve(&args),
        Command::Matsolve(args) => cmd_matsolve(&args),
        Command::Eig(args) => cmd_eig(&args),
        Command::Verify(_) => unreachable!("handled by run"),
    }
}

fn literal(flag: &str, text: &str) -> Result<Octonion, Failure> {
    text.parse::<Octonion>()
        .map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn required<'a>(flag: &str, value: &'a Option<String>, equation: &str) -> Result<&'a str, Failure> {
    value
        .as_deref()
        .ok_or_else(|| Failure::Usage(format!("{equation} needs --{flag}")))
}

fn cmd_mul(a: &str, b: &str) -> CliResult {
    let (a, b) = (literal("a", a)?, literal("b", b)?);
    Ok(format!("{}\n", a * b))
}

fn render_matrix(m: &RealMatrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|&x| fmt_real(x)).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

fn cmd_rep(kind: KindArg, a: &str) -> CliResult {
    let a = literal("a", a)?;
    let kind = match kind {
        KindArg::Left => RepKind::Left,
        KindArg::Right => RepKind::Right,
    };
    Ok(render_matrix(&rep(kind, a)))
}

fn render_solution(set: &SolutionSet<Octonion>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "solvable: {}", set.solvable);
    if let Some(p) = set.particular {
        let _ = writeln!(out, "particular: {p}");
    }
    let _ = writeln!(out, "null-space dimension: {}", set.dimension());
    for h in &set.null_basis {
        let _ = writeln!(out, "  basis: {h}");
    }
    let _ = writeln!(out, "residual: {}", fmt_real(set.residual));
    if let Some(cf) = set.closed_form {
        let _ = writeln!(out, "closed-form condition: {} (agrees: {})", cf.condition, cf.agrees);
        if let Some(r) = cf.residual {
            let _ = writeln!(out, "closed-form residual: {}", fmt_real(r));
        }
    }
    out
}

fn cmd_solve(args: &SolveArgs) -> CliResult {
    let name = match args.equation {
        EquationArg::Sim => "sim",
        EquationArg::Commutator => "commutator",
        EquationArg::Conj => "conj",
        EquationArg::Sylvester => "sylvester",
        EquationArg::Assoc => "assoc",
    };
    let a = literal("a", required("a", &args.a, name)?)?;
    let b = literal("b", required("b", &args.b, name)?)?;
    let set = match args.equation {
        EquationArg::Sim => solve_sim(a, b)?,
        EquationArg::Commutator => solve_commutator(a, b)?,
        EquationArg::Conj => solve_conj(a, b)?,
        EquationArg::Sylvester => solve_sylvester(a, b, literal("c", required("c", &args.c, name)?)?)?,
        EquationArg::Assoc => {
            let c = literal("c", required("c", &args.c, name)?)?;
            solve_assoc(args.form.into(), a, b, c)?
        }
    };
    Ok(render_solution(&set))
}

fn read_matrix(path: &Path) -> Result<OctonionMatrix, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    OctonionMatrix::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn cmd_matsolve(args: &MatsolveArgs) -> CliResult {
    let a = read_matrix(&args.a)?;
    let rhs = read_matrix(&args.rhs)?;
    let b = args.b.as_deref().map(read_matrix).transpose()?;
    let need_b = || {
        b.as_ref()
            .ok_or_else(|| Failure::Usage(format!("{} needs --b", args.eq)))
    };
    let eq = match args.eq.as_str() {
        "AX=B" => MatrixEquation::LeftMul { a: &a, rhs: &rhs },
        "XA=B" => MatrixEquation::RightMul { a: &a, rhs: &rhs },
        "AXB=C-left" => MatrixEquation::OuterProduct { a: &a, b: need_b()?, rhs: &rhs },
        "AXB=C-right" => MatrixEquation::InnerProduct { a: &a, b: need_b()?, rhs: &rhs },
        "AX-XB=C" => MatrixEquation::Sylvester { a: &a, b: need_b()?, rhs: &rhs },
        "assoc" => MatrixEquation::Associator { a: &a, rhs: &rhs },
        other => return Err(Failure::Usage(format!("unknown equation {other}"))),
    };
    let set = eq.solve()?;
    let Some(x) = &set.particular else {
        return Err(Failure::Unsolvable(format!(
            "{} has no solution (least-squares residual {})",
            args.eq,
            fmt_real(set.residual)
        )));
    };
    std::fs::write(&args.out, x.to_json())
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", args.out.display())))?;
    Ok(format!(
        "solution: {} ({}x{})\nresidual: {}\nnull-space dimension: {}\n",
        args.out.display(),
        x.rows(),
        x.cols(),
        fmt_real(set.residual),
        set.dimension()
    ))
}

fn cmd_eig(args: &EigArgs) -> CliResult {
    if let Some(m) = args.census {
        let census = multiplicity_census(m, args.trials, args.seed)?;
        return Ok(census.to_csv());
    }
    let path = args
        .input
        .as_deref()
        .ok_or_else(|| Failure::Usage("eig needs --input or --census".into()))?;
    let report = hermitian_eigen(&read_matrix(path)?, args.group_tol)?;
    if args.json {
        return Ok(format!("{}\n", report.to_json()));
    }
    if args.csv {
        return Ok(report.to_csv());
    }
    Ok(format!(
        "{}\nmax residual: {}\n",
        report.summary(),
        fmt_real(report.max_residual)
    ))
}

fn cmd_verify(args: &VerifyArgs) -> (Result<(), Failure>, String) {
    let suites = match parse_suites(&args.suite) {
        Ok(s) => s,
        Err(e) => return (Err(e.into()), String::new()),
    };
    let cfg = VerifyConfig {
        trials: args.trials,
        seed: args.seed,
        tol: args.tol,
    };
    let mut out = String::new();
    let mut failed = false;
    let mut results = Vec::new();
    for suite in suites {
        match suite.run(&cfg) {
            Ok(r) => {
                failed |= !r.passed();
                if !args.json {
                    out.push_str(&r.render());
                }
                results.push(r);
            }
            Err(e) => return (Err(e.into()), out),
        }
    }
    if args.json {
        out = serde_json::to_string_pretty(&results).expect("results serialize");
        out.push('\n');
    }
    (if failed { Err(Failure::VerifyFailed) } else { Ok(()) }, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octo(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("octo").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    const E1: &str = "0,1,0,0,0,0,0,0";
    const E2: &str = "0,0,1,0,0,0,0,0";

    #[test]
    fn mul_follows_the_table() {
        assert_eq!(octo(&["mul", "--a", E1, "--b", E2]), (0, "0,0,0,1,0,0,0,0\n".into(), String::new()));
        let (code, _, err) = octo(&["mul", "--a", "1,2", "--b", E2]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--a"));
    }

    #[test]
    fn rep_prints_eight_rows() {
        let (code, out, _) = octo(&["rep", "--kind", "left", "--a", "1,0,0,0,0,0,0,0"]);
        assert_eq!(code, 0);
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[0], "1 0 0 0 0 0 0 0");
        assert_eq!(rows[7], "0 0 0 0 0 0 0 1");
    }

    #[test]
    fn solve_reports_and_maps_exit_codes() {
        let (code, out, _) = octo(&["solve", "sim", "--a", E1, "--b", E2]);
        assert_eq!(code, 0);
        assert!(out.contains("solvable: true") && out.contains("null-space dimension: 2"));
        let (code, out, _) = octo(&["solve", "conj", "--a", E1, "--b", E2]);
        assert_eq!(code, 0);
        assert!(out.contains("solvable: false"));
        let (code, _, _) = octo(&["solve", "sylvester", "--a", E1, "--b", E2]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = octo(&["solve", "commutator", "--a", "2,0,0,0,0,0,0,0", "--b", E1]);
        assert_eq!(code, EXIT_INPUT);
    }

    #[test]
    fn unknown_suite_is_usage_error() {
        assert_eq!(octo(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
        assert_eq!(octo(&["verify", "--suite", "octonion-laws", "--trials", "2"]).0, 0);
        assert_eq!(octo(&["bogus"]).0, EXIT_USAGE);
    }
}
