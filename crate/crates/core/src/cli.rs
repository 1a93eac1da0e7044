//! The `gammabnd` command line: argument parsing, dispatch and output
//! documents. [`run`] never panics and never exits the process; the binary
//! only prints what it returns.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 convergence error.

use crate::boundary::{gap_check, radial_probe, GapReport, ProbeReport};
use crate::error::Error;
use crate::gamma::{asymptotic_log_gamma, gamma_vertical, Parameters};
use crate::integral::eval_integral;
use crate::laurent::{eval_laurent, AnnulusPoint, SeriesEval};
use crate::dirichlet::eval_dirichlet;
use crate::verify::{run_battery, VerifyOptions, VerifyReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::ffi::OsString;
use std::f64::consts::PI;

/// Schema version carried by every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

pub const TOL_MIN: f64 = 1e-14;
pub const TOL_MAX: f64 = 1e-2;

const MAX_COEFFS: i64 = 10_000_000;
const MAX_GRID: usize = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "gammabnd", version, about = "Evaluate and verify Ψ(u, v, z) = Σ Γ(u + 2ivn/π) zⁿ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate Ψ at one point by one or all representations.
    Eval(EvalArgs),
    /// Run the residual battery on the standard grid and seeded random points.
    Verify(VerifyArgs),
    /// Ψ along a ray toward the outer boundary |z| = e^v.
    Probe(ProbeArgs),
    /// ln Γ(u + 2ivn/π) for a range of n, with the Stirling form alongside.
    Coeffs(CoeffsArgs),
    /// |Ψ| over a polar grid inside the annulus.
    Scan(ScanArgs),
    /// Growth of the gaps between the frequencies q^k.
    Gapcheck(GapArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Laurent,
    Dirichlet,
    Integral,
    All,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the document here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct UV {
    /// Complex u, e.g. 1, 0.5+0.3i, -2i.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    u: Complex64,
    /// Real v, e.g. 1, pi/2, 2pi, pi^2.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
    v: f64,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    uv: UV,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    z: Complex64,
    #[arg(long, value_enum, default_value = "laurent")]
    method: MethodArg,
    #[arg(long, default_value = "1e-12", allow_hyphen_values = true, value_parser = parse_tol)]
    tol: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of seeded random points added to the standard grid.
    #[arg(long, default_value_t = 100)]
    points: usize,
    /// Test hook: scale one coefficient of Ψ(u+1) by (1 + perturb) in the
    /// contiguity check.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
    perturb: Option<f64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct ProbeArgs {
    #[command(flatten)]
    uv: UV,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
    theta: f64,
    #[arg(long, default_value_t = 8)]
    steps: usize,
    /// Stop once v - ln r drops below closeness · v.
    #[arg(long, default_value = "1e-9", value_parser = parse_real)]
    closeness: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    #[command(flatten)]
    uv: UV,
    /// Inclusive index range a..b.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    n: (i64, i64),
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[command(flatten)]
    uv: UV,
    #[arg(long, default_value_t = 16)]
    thetas: usize,
    #[arg(long, default_value_t = 8)]
    radii: usize,
    #[arg(long, value_enum, default_value = "laurent")]
    method: MethodArg,
    #[arg(long, default_value = "1e-12", allow_hyphen_values = true, value_parser = parse_tol)]
    tol: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct GapArgs {
    /// Frequency ratio; give either --q or --v (then q = e^{π²/v}).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_real, conflicts_with = "v", required_unless_present = "v")]
    q: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
    v: Option<f64>,
    #[arg(long, default_value_t = 20)]
    kmax: i64,
    #[command(flatten)]
    output: Output,
}

/// What the binary should print and exit with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(doc: String) -> Self {
        Outcome {
            code: 0,
            stdout: doc,
            stderr: String::new(),
        }
    }
}

/// Parses "a", "bi", "a+bi", "a - b i", "i", "-i"; spaces are ignored.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex number".into());
    }
    let bad = || format!("cannot parse {s:?} as a complex number a+bi");
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return parse_finite(&t).map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // split before the last sign that is not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_finite(other).map_err(|_| bad())?,
    };
    let re = parse_finite(re).map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

/// Shortest form that [`parse_complex`] reads back exactly.
pub fn format_complex(z: Complex64) -> String {
    if z.im.is_sign_negative() {
        format!("{:?}-{:?}i", z.re, -z.im)
    } else {
        format!("{:?}+{:?}i", z.re, z.im)
    }
}

fn parse_finite(s: &str) -> Result<f64, String> {
    // Rust also accepts "inf" and "nan"; only finite decimal numbers pass
    if !s.bytes().all(|b| b.is_ascii_digit() || matches!(b, b'+' | b'-' | b'.' | b'e' | b'E')) {
        return Err(format!("{s:?} is not a decimal number"));
    }
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(format!("{s:?} is not a finite number")),
    }
}

/// A decimal number or a multiple of π: "1.5", "pi", "pi/2", "2pi", "-3*pi", "pi^2".
pub fn parse_real(s: &str) -> Result<f64, String> {
    let t: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_lowercase()
        .replace('π', "pi");
    let Some(at) = t.find("pi") else {
        return parse_finite(&t);
    };
    let bad = || format!("cannot parse {s:?} as a real number");
    let coef = match t[..at].trim_end_matches('*') {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => parse_finite(c).map_err(|_| bad())?,
    };
    let mut rest = &t[at + 2..];
    let mut x = coef * PI;
    if let Some(r) = rest.strip_prefix("^2").or_else(|| rest.strip_prefix("**2")) {
        x *= PI;
        rest = r;
    }
    if let Some(d) = rest.strip_prefix('/') {
        let d = parse_finite(d).map_err(|_| bad())?;
        if d == 0.0 {
            return Err(bad());
        }
        x /= d;
        rest = "";
    }
    if !rest.is_empty() || !x.is_finite() {
        return Err(bad());
    }
    Ok(x)
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t = parse_real(s)?;
    if (TOL_MIN..=TOL_MAX).contains(&t) {
        Ok(t)
    } else {
        Err(format!("tol must lie in [{TOL_MIN:e}, {TOL_MAX:e}], got {t:e}"))
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("expected an inclusive range a..b, got {s:?}");
    let (a, b) = t.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: i64 = a.parse().map_err(|_| bad())?;
    let b: i64 = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    if b.checked_sub(a).map_or(true, |w| w >= MAX_COEFFS) {
        return Err(format!("at most {MAX_COEFFS} coefficients per call"));
    }
    Ok((a, b))
}

#[derive(Serialize)]
struct ErrorBody {
    code: &'static str,
    message: String,
}

#[derive(Serialize)]
struct ErrorDoc {
    version: u32,
    command: String,
    error: ErrorBody,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_domain() {
        2
    } else {
        3
    }
}

fn error_outcome(command: &str, code: i32, kind: &'static str, message: String) -> Outcome {
    let doc = ErrorDoc {
        version: SCHEMA_VERSION,
        command: command.to_string(),
        error: ErrorBody { code: kind, message },
    };
    Outcome {
        code,
        stdout: String::new(),
        stderr: to_json(&doc),
    }
}

fn library_error(command: &str, e: &Error) -> Outcome {
    error_outcome(command, exit_code(e), e.code(), e.to_string())
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).unwrap_or_else(|e| format!("{{\"serialization_error\": \"{e}\"}}"));
    s.push('\n');
    s
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

/// Sends a finished document to `--out` or stdout.
fn deliver(command: &str, output: &Output, doc: Result<String, String>, code: i32) -> Outcome {
    let doc = match doc {
        Ok(d) => d,
        Err(e) => return error_outcome(command, 1, "OutputError", e),
    };
    match &output.out {
        Some(path) => match std::fs::write(path, &doc) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => error_outcome(command, 1, "OutputError", format!("{}: {e}", path.display())),
        },
        None => Outcome {
            code,
            ..Outcome::ok(doc)
        },
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("GAMMABND_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| format!("GAMMABND_THREADS must be an integer >= 1, got {raw:?}"))?;
    // a second call finds the pool already built, which is fine
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => error_outcome("", 1, "UsageError", text.trim_end().to_string()),
            };
        }
    };
    if let Err(msg) = configure_threads() {
        return error_outcome("", 1, "UsageError", msg);
    }
    match cli.command {
        Command::Eval(a) => cmd_eval(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Probe(a) => cmd_probe(&a),
        Command::Coeffs(a) => cmd_coeffs(&a),
        Command::Scan(a) => cmd_scan(&a),
        Command::Gapcheck(a) => cmd_gapcheck(&a),
    }
}

#[derive(Clone, Copy, Serialize)]
struct ParamsDoc {
    u_re: f64,
    u_im: f64,
    v: f64,
}

impl From<&Parameters> for ParamsDoc {
    fn from(p: &Parameters) -> Self {
        ParamsDoc {
            u_re: p.u.re,
            u_im: p.u.im,
            v: p.v,
        }
    }
}

#[derive(Serialize)]
struct MethodResult {
    method: &'static str,
    value_re: f64,
    value_im: f64,
    tail_bound: f64,
    /// Terms summed, or quadrature nodes for the integral.
    terms_or_nodes: i64,
    params: ParamsDoc,
}

#[derive(Serialize)]
struct MethodError {
    method: &'static str,
    code: &'static str,
    message: String,
}

#[derive(Serialize)]
struct PairDiff {
    a: &'static str,
    b: &'static str,
    rel_diff: f64,
}

#[derive(Serialize)]
struct EvalDoc {
    version: u32,
    command: &'static str,
    params: ParamsDoc,
    z_re: f64,
    z_im: f64,
    tol: f64,
    results: Vec<MethodResult>,
    errors: Vec<MethodError>,
    pairwise: Vec<PairDiff>,
}

type Evaluator = fn(&Parameters, &AnnulusPoint, f64) -> crate::Result<SeriesEval>;

fn methods(m: MethodArg) -> Vec<(&'static str, Evaluator)> {
    let all: [(&'static str, Evaluator); 3] = [
        ("laurent", eval_laurent),
        ("dirichlet", eval_dirichlet),
        ("integral", eval_integral),
    ];
    match m {
        MethodArg::Laurent => vec![all[0]],
        MethodArg::Dirichlet => vec![all[1]],
        MethodArg::Integral => vec![all[2]],
        MethodArg::All => all.to_vec(),
    }
}

fn cmd_eval(a: &EvalArgs) -> Outcome {
    const CMD: &str = "eval";
    let params = match Parameters::new(a.uv.u, a.uv.v) {
        Ok(p) => p,
        Err(e) => return library_error(CMD, &e),
    };
    let z = match AnnulusPoint::new(a.z) {
        Ok(z) => z,
        Err(e) => return library_error(CMD, &e),
    };
    let mut results = Vec::new();
    let mut errors = Vec::new();
    let mut first_code = 0;
    for (name, f) in methods(a.method) {
        match f(&params, &z, a.tol) {
            Ok(s) => results.push(MethodResult {
                method: name,
                value_re: s.value.re,
                value_im: s.value.im,
                tail_bound: s.tail_bound,
                terms_or_nodes: if name == "integral" { s.n_pos } else { s.terms() },
                params: (&params).into(),
            }),
            Err(e) => {
                if first_code == 0 {
                    first_code = exit_code(&e);
                }
                errors.push(MethodError {
                    method: name,
                    code: e.code(),
                    message: e.to_string(),
                });
            }
        }
    }
    // a single requested method that failed is reported as a plain error
    if results.is_empty() && errors.len() == 1 {
        let e = &errors[0];
        return error_outcome(CMD, first_code, e.code, e.message.clone());
    }
    let mut pairwise = Vec::new();
    for i in 0..results.len() {
        for j in i + 1..results.len() {
            let x = Complex64::new(results[i].value_re, results[i].value_im);
            let y = Complex64::new(results[j].value_re, results[j].value_im);
            pairwise.push(PairDiff {
                a: results[i].method,
                b: results[j].method,
                rel_diff: (x - y).norm() / x.norm().max(y.norm()),
            });
        }
    }
    let doc = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => Ok(to_json(&EvalDoc {
            version: SCHEMA_VERSION,
            command: CMD,
            params: (&params).into(),
            z_re: a.z.re,
            z_im: a.z.im,
            tol: a.tol,
            results,
            errors,
            pairwise,
        })),
        Format::Csv => to_csv(&results.iter().map(EvalRow::from).collect::<Vec<_>>()),
    };
    deliver(CMD, &a.output, doc, first_code)
}

#[derive(Serialize)]
struct EvalRow {
    method: &'static str,
    value_re: f64,
    value_im: f64,
    tail_bound: f64,
    terms_or_nodes: i64,
    u_re: f64,
    u_im: f64,
    v: f64,
}

impl From<&MethodResult> for EvalRow {
    fn from(r: &MethodResult) -> Self {
        EvalRow {
            method: r.method,
            value_re: r.value_re,
            value_im: r.value_im,
            tail_bound: r.tail_bound,
            terms_or_nodes: r.terms_or_nodes,
            u_re: r.params.u_re,
            u_im: r.params.u_im,
            v: r.params.v,
        }
    }
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    version: u32,
    command: &'static str,
    #[serde(flatten)]
    report: &'a VerifyReport,
}

#[derive(Serialize)]
struct CheckRow<'a> {
    check: &'a str,
    threshold: f64,
    max_residual: f64,
    points: usize,
    errors: usize,
    passed: bool,
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    const CMD: &str = "verify";
    if a.points > MAX_GRID {
        return error_outcome(CMD, 1, "UsageError", format!("at most {MAX_GRID} random points"));
    }
    let report = run_battery(&VerifyOptions {
        seed: a.seed,
        random_points: a.points,
        perturb: a.perturb,
    });
    let doc = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => Ok(to_json(&VerifyDoc {
            version: SCHEMA_VERSION,
            command: CMD,
            report: &report,
        })),
        Format::Csv => to_csv(
            &report
                .checks
                .iter()
                .map(|c| CheckRow {
                    check: &c.check,
                    threshold: c.threshold,
                    max_residual: c.max_residual,
                    points: c.points,
                    errors: c.errors.len(),
                    passed: c.passed,
                })
                .collect::<Vec<_>>(),
        ),
    };
    deliver(CMD, &a.output, doc, if report.passed { 0 } else { 3 })
}

#[derive(Serialize)]
struct ProbeRow<'a> {
    step: usize,
    r: f64,
    value_re: f64,
    value_im: f64,
    abs_value: f64,
    tail_bound: f64,
    terms: usize,
    arg_t: f64,
    error: &'a str,
}

#[derive(Serialize)]
struct ProbeDoc<'a> {
    version: u32,
    command: &'static str,
    params: ParamsDoc,
    #[serde(flatten)]
    report: &'a ProbeReport,
}

fn cmd_probe(a: &ProbeArgs) -> Outcome {
    const CMD: &str = "probe";
    let params = match Parameters::new(a.uv.u, a.uv.v) {
        Ok(p) => p,
        Err(e) => return library_error(CMD, &e),
    };
    let report = match radial_probe(&params, a.theta, a.steps, a.closeness) {
        Ok(r) => r,
        Err(e) => return library_error(CMD, &e),
    };
    let doc = match a.output.format.unwrap_or(Format::Csv) {
        Format::Json => Ok(to_json(&ProbeDoc {
            version: SCHEMA_VERSION,
            command: CMD,
            params: (&params).into(),
            report: &report,
        })),
        Format::Csv => {
            let rows: Vec<ProbeRow> = (0..report.radii.len())
                .map(|i| ProbeRow {
                    step: i + 1,
                    r: report.radii[i],
                    value_re: report.values[i].re,
                    value_im: report.values[i].im,
                    abs_value: report.values[i].norm(),
                    tail_bound: report.tail_bounds[i],
                    terms: report.term_counts[i],
                    arg_t: report.arg_t[i],
                    error: report.errors[i].as_deref().unwrap_or(""),
                })
                .collect();
            to_csv(&rows)
        }
    };
    deliver(CMD, &a.output, doc, 0)
}

#[derive(Serialize)]
struct CoeffRow {
    n: i64,
    log_modulus: f64,
    argument: f64,
    asymptotic_log_modulus: Option<f64>,
    asymptotic_argument: Option<f64>,
}

#[derive(Serialize)]
struct CoeffDoc<'a> {
    version: u32,
    command: &'static str,
    params: ParamsDoc,
    rows: &'a [CoeffRow],
}

fn cmd_coeffs(a: &CoeffsArgs) -> Outcome {
    const CMD: &str = "coeffs";
    let params = match Parameters::new(a.uv.u, a.uv.v) {
        Ok(p) => p,
        Err(e) => return library_error(CMD, &e),
    };
    let coeffs = match gamma_vertical(&params, a.n.0, a.n.1) {
        Ok(c) => c,
        Err(e) => return library_error(CMD, &e),
    };
    let rows: Vec<CoeffRow> = coeffs
        .into_par_iter()
        .map(|(n, c)| {
            let asym = if n >= 1 { asymptotic_log_gamma(&params, n).ok() } else { None };
            CoeffRow {
                n,
                log_modulus: c.log_modulus,
                argument: c.argument,
                asymptotic_log_modulus: asym.map(|l| l.log_modulus),
                asymptotic_argument: asym.map(|l| l.argument),
            }
        })
        .collect();
    let doc = match a.output.format.unwrap_or(Format::Csv) {
        Format::Json => Ok(to_json(&CoeffDoc {
            version: SCHEMA_VERSION,
            command: CMD,
            params: (&params).into(),
            rows: &rows,
        })),
        Format::Csv => to_csv(&rows),
    };
    deliver(CMD, &a.output, doc, 0)
}

#[derive(Clone, Serialize)]
struct ScanRow {
    theta: f64,
    r: f64,
    /// NaN where the evaluation failed.
    abs_value: f64,
    method: &'static str,
}

#[derive(Serialize)]
struct ScanPointError {
    theta: f64,
    r: f64,
    code: &'static str,
}

#[derive(Serialize)]
struct ScanDoc<'a> {
    version: u32,
    command: &'static str,
    params: ParamsDoc,
    tol: f64,
    rows: &'a [ScanRow],
    errors: Vec<ScanPointError>,
}

fn cmd_scan(a: &ScanArgs) -> Outcome {
    const CMD: &str = "scan";
    let params = match Parameters::new(a.uv.u, a.uv.v) {
        Ok(p) => p,
        Err(e) => return library_error(CMD, &e),
    };
    if a.thetas == 0 || a.radii == 0 || a.thetas.saturating_mul(a.radii) > MAX_GRID {
        return error_outcome(CMD, 1, "UsageError", format!("grid must have between 1 and {MAX_GRID} points"));
    }
    if params.v == 0.0 {
        return library_error(CMD, &Error::OutsideDomain("the annulus is empty for v = 0".into()));
    }
    let av = params.v.abs();
    let mut points = Vec::with_capacity(a.thetas * a.radii);
    for j in 0..a.thetas {
        let theta = -PI + (j + 1) as f64 * 2.0 * PI / a.thetas as f64;
        for i in 0..a.radii {
            // ln r evenly inside (-|v|, |v|)
            let lr = av * (2.0 * (i + 1) as f64 / (a.radii + 1) as f64 - 1.0);
            points.push((theta, lr.exp()));
        }
    }
    let evals = methods(a.method);
    let cells: Vec<(ScanRow, Option<ScanPointError>)> = points
        .par_iter()
        .flat_map_iter(|&(theta, r)| {
            let evals = &evals;
            evals.iter().map(move |&(name, f)| {
                let out = AnnulusPoint::from_polar(r, theta).and_then(|z| f(&params, &z, a.tol));
                match out {
                    Ok(s) => (ScanRow { theta, r, abs_value: s.value.norm(), method: name }, None),
                    Err(e) => (
                        ScanRow { theta, r, abs_value: f64::NAN, method: name },
                        Some(ScanPointError { theta, r, code: e.code() }),
                    ),
                }
            })
        })
        .collect();
    let (rows, errs): (Vec<ScanRow>, Vec<Option<ScanPointError>>) = cells.into_iter().unzip();
    let doc = match a.output.format.unwrap_or(Format::Csv) {
        Format::Json => Ok(to_json(&ScanDoc {
            version: SCHEMA_VERSION,
            command: CMD,
            params: (&params).into(),
            tol: a.tol,
            rows: &rows,
            errors: errs.into_iter().flatten().collect(),
        })),
        Format::Csv => to_csv(&rows),
    };
    deliver(CMD, &a.output, doc, 0)
}

#[derive(Serialize)]
struct GapRow {
    k: i64,
    lambda: f64,
    gap: f64,
    log_gap: f64,
}

#[derive(Serialize)]
struct GapDoc<'a> {
    version: u32,
    command: &'static str,
    #[serde(flatten)]
    report: &'a GapReport,
}

fn cmd_gapcheck(a: &GapArgs) -> Outcome {
    const CMD: &str = "gapcheck";
    let q = match (a.q, a.v) {
        (Some(q), _) => q,
        (None, Some(v)) if v > 0.0 => (PI * PI / v).exp(),
        (None, Some(v)) => {
            return library_error(CMD, &Error::OutsideDomain(format!("q = e^(π²/v) needs v > 0, got {v}")))
        }
        (None, None) => return error_outcome(CMD, 1, "UsageError", "give --q or --v".into()),
    };
    let report = match gap_check(q, a.kmax) {
        Ok(r) => r,
        Err(e) => return library_error(CMD, &e),
    };
    let doc = match a.output.format.unwrap_or(Format::Csv) {
        Format::Json => Ok(to_json(&GapDoc {
            version: SCHEMA_VERSION,
            command: CMD,
            report: &report,
        })),
        Format::Csv => {
            let rows: Vec<GapRow> = (0..report.gaps.len())
                .map(|k| GapRow {
                    k: k as i64,
                    lambda: report.lambdas[k],
                    gap: report.gaps[k],
                    log_gap: report.log_gaps[k],
                })
                .collect();
            to_csv(&rows)
        }
    };
    deliver(CMD, &a.output, doc, if report.holds { 0 } else { 3 })
}
