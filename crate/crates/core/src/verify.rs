//! The residual battery behind `gammabnd verify`.
//!
//! Every pass/fail limit lives in [`THRESHOLDS`]. Points are the standard grid
//! (u ∈ {1, 0.5+0.3i, 2}, v ∈ {1, π/2, 3}, ln|z| ∈ {-v/2, 0, v/2}, eight
//! angles) plus seeded random points; results are collected in input order,
//! so a given seed always produces the same report.

use crate::dirichlet::{eval_dirichlet, functional_residuals, map_to_halfplane};
use crate::error::{Error, Result};
use crate::gamma::Parameters;
use crate::integral::eval_integral;
use crate::laurent::{contiguity_residual_with, eval_laurent, inversion_residual, reflection_transfer, AnnulusPoint, EvalOptions};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Threshold {
    pub check: &'static str,
    pub limit: f64,
    pub measures: &'static str,
}

/// Pass/fail limits of the battery, in report order.
pub const THRESHOLDS: &[Threshold] = &[
    Threshold {
        check: "contiguity",
        limit: 1e-9,
        measures: "|Ψ(u+1) - ((2vi/π) z∂z + u)Ψ(u)| / |Ψ(u+1)|",
    },
    Threshold {
        check: "inversion",
        limit: 1e-9,
        measures: "|Ψ(u, v, 1/z) - Ψ(u, -v, z)| / |Ψ(u, -v, z)|",
    },
    Threshold {
        check: "reflection",
        limit: 1e-11,
        measures: "|(e^{iπw} - e^{-iπw}) Γ(1-w) Γ(w) / 2πi - 1|, w = u + 2ivn/π, |n| <= 10^4",
    },
    Threshold {
        check: "q_difference",
        limit: 1e-10,
        measures: "max of the three q-difference residuals of S-, S+ and S",
    },
    Threshold {
        check: "cross_representation",
        limit: 1e-8,
        measures: "|Laurent - Dirichlet| / |Laurent|",
    },
    Threshold {
        check: "integral",
        limit: 1e-6,
        measures: "max(|Integral - Laurent|, |Integral - Dirichlet|) / |Laurent|",
    },
    Threshold {
        check: "branch_cut",
        limit: 1e-7,
        measures: "seam mismatch of the Dirichlet form across arg z = ±(π - 1e-6), relative to |Ψ(-r)|",
    },
];

pub fn threshold(check: &str) -> f64 {
    THRESHOLDS
        .iter()
        .find(|t| t.check == check)
        .map(|t| t.limit)
        .expect("known check name")
}

/// Tolerances the battery evaluates at.
const SERIES_TOL: f64 = 1e-14;
const INTEGRAL_TOL: f64 = 1e-12;
const QDIFF_TOL: f64 = 1e-11;
/// Quadrature tolerance below which extra nodes no longer change the verdict.
const INTEGRAL_FLOOR: f64 = 1e-15;
const REFLECTION_RANGE: i64 = 10_000;
const BRANCH_DELTA: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub random_points: usize,
    /// Scales coefficient n = 1 of Ψ(u+1) by (1 + perturb) in the contiguity
    /// check only.
    pub perturb: Option<f64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 1,
            random_points: 100,
            perturb: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub threshold: f64,
    pub max_residual: f64,
    pub points: usize,
    /// Points whose evaluation failed outright, by error code.
    pub errors: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub random_points: usize,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

/// A (u, v, z) sample.
#[derive(Clone, Copy, Debug)]
pub struct Sample {
    pub params: Parameters,
    pub z: AnnulusPoint,
}

pub fn standard_params() -> Vec<Parameters> {
    let mut out = Vec::new();
    for u in [Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.3), Complex64::new(2.0, 0.0)] {
        for v in [1.0, PI / 2.0, 3.0] {
            out.push(Parameters { u, v });
        }
    }
    out
}

/// θ_j = -π + (j+1)π/4, j = 0..8.
pub fn standard_angles() -> [f64; 8] {
    std::array::from_fn(|j| -PI + (j + 1) as f64 * PI / 4.0)
}

pub fn standard_grid() -> Vec<Sample> {
    let mut out = Vec::new();
    for params in standard_params() {
        let v = params.v;
        for lr in [-v / 2.0, 0.0, v / 2.0] {
            for theta in standard_angles() {
                let z = AnnulusPoint::from_polar(lr.exp(), theta).expect("grid point");
                out.push(Sample { params, z });
            }
        }
    }
    out
}

/// Re u ∈ (0.3, 2.5), Im u ∈ (-1, 1), v ∈ (0.5, 3), ln|z| ∈ (-0.75v, 0.75v).
pub fn random_samples(seed: u64, count: usize) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u = Complex64::new(rng.gen_range(0.3..2.5), rng.gen_range(-1.0..1.0));
            let v = rng.gen_range(0.5..3.0);
            let lr = v * rng.gen_range(-0.75..0.75);
            let theta = rng.gen_range(-PI..PI);
            Sample {
                params: Parameters { u, v },
                z: AnnulusPoint::from_polar(lr.exp(), theta).expect("random point"),
            }
        })
        .collect()
}

fn summarize(check: &str, outcomes: Vec<Result<f64>>) -> CheckResult {
    let limit = threshold(check);
    let mut max: f64 = 0.0;
    let mut errors = Vec::new();
    for o in &outcomes {
        match o {
            Ok(r) if r.is_nan() => max = f64::NAN,
            Ok(r) => max = if max.is_nan() { max } else { max.max(*r) },
            Err(e) => errors.push(e.code().to_string()),
        }
    }
    CheckResult {
        check: check.to_string(),
        threshold: limit,
        max_residual: max,
        points: outcomes.len(),
        passed: errors.is_empty() && max <= limit,
        errors,
    }
}

/// Tolerance for a relative comparison against a value of size about `scale`:
/// series tolerances are absolute once |Γ(u)| ≥ 1, and Ψ can sit orders of
/// magnitude below its largest terms.
fn scaled(scale: f64) -> f64 {
    SERIES_TOL * scale.min(1.0).max(1e-200)
}

/// Quadrature tolerance for a value of size `scale`: a thousandth of the
/// integral threshold relative to `scale`, never below the rounding floor.
fn integral_tol(scale: f64) -> f64 {
    (INTEGRAL_TOL * scale.min(1.0)).max(1e-3 * threshold("integral") * scale).max(INTEGRAL_FLOOR)
}

/// Laurent value accurate relative to itself.
fn laurent_rel(params: &Parameters, z: &AnnulusPoint) -> Result<Complex64> {
    let first = eval_laurent(params, z, SERIES_TOL)?.value;
    if first.norm() >= 1.0 {
        return Ok(first);
    }
    Ok(eval_laurent(params, z, scaled(0.5 * first.norm()))?.value)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

pub fn contiguity_check(samples: &[Sample], perturb: Option<f64>) -> CheckResult {
    let opts = EvalOptions {
        perturb: perturb.map(|p| (1, 1.0 + p)),
    };
    let out = samples
        .par_iter()
        .map(|s| {
            let lhs = laurent_rel(&s.params.with_u(s.params.u + 1.0), &s.z)?;
            contiguity_residual_with(&s.params, &s.z, scaled(0.5 * lhs.norm()), opts)
        })
        .collect();
    summarize("contiguity", out)
}

pub fn inversion_check(samples: &[Sample]) -> CheckResult {
    let out = samples
        .par_iter()
        .map(|s| {
            let b = laurent_rel(&s.params.with_v(-s.params.v), &s.z)?;
            inversion_residual(&s.params, &s.z, scaled(0.5 * b.norm()))
        })
        .collect();
    summarize("inversion", out)
}

/// Full index range |n| <= 10^4 for every parameter pair. Indices where
/// Γ(1 - w) sits on a pole are skipped: the identity has no finite form there.
pub fn reflection_check(params: &[Parameters]) -> CheckResult {
    let out = params
        .par_iter()
        .map(|p| {
            let mut worst: f64 = 0.0;
            for n in -REFLECTION_RANGE..=REFLECTION_RANGE {
                match reflection_transfer(p, n) {
                    Ok(r) => worst = worst.max(r),
                    Err(Error::GammaPole { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
            Ok(worst)
        })
        .collect();
    summarize("reflection", out)
}

/// The q-difference equations at q = ṽ and ζ = t_z / |t_z|, the direction of
/// the image point (|ζ| is kept at 1: the S- residual is relative to
/// |e^{-ζ}|, which is unrepresentably small next to S- once Re ζ is large).
pub fn q_difference_check(samples: &[Sample]) -> CheckResult {
    let out = samples
        .par_iter()
        .map(|s| {
            let img = map_to_halfplane(&s.params, &s.z)?;
            let zeta = img.t_z / img.t_z.norm();
            let (a, b, c) = functional_residuals(s.params.u, img.v_tilde, zeta, QDIFF_TOL)?;
            Ok(a.max(b).max(c))
        })
        .collect();
    summarize("q_difference", out)
}

pub fn cross_representation_check(samples: &[Sample]) -> CheckResult {
    let out = samples
        .par_iter()
        .map(|s| {
            let l = laurent_rel(&s.params, &s.z)?;
            let d = eval_dirichlet(&s.params, &s.z, scaled(0.5 * l.norm()))?.value;
            Ok(rel(d, l))
        })
        .collect();
    summarize("cross_representation", out)
}

pub fn integral_check(samples: &[Sample]) -> CheckResult {
    let out = samples
        .par_iter()
        .map(|s| {
            let l = laurent_rel(&s.params, &s.z)?;
            let d = eval_dirichlet(&s.params, &s.z, scaled(0.5 * l.norm()))?.value;
            let i = eval_integral(&s.params, &s.z, integral_tol(l.norm()))?.value;
            Ok(((i - l).norm().max((i - d).norm())) / l.norm())
        })
        .collect();
    summarize("integral", out)
}

/// Seam residual at |z| = e^{v/4} for one parameter pair.
///
/// Ψ itself moves by about 2δr|Ψ'| between arg z = ±(π - δ), so the raw jump
/// is not a seam test. What is checked is that the Dirichlet form reproduces
/// the series on both sides of the cut and that the two sides average to
/// Ψ(-r).
pub fn branch_cut_residual(params: &Parameters) -> Result<f64> {
    let r = (params.v.abs() / 4.0).exp();
    let up = AnnulusPoint::from_polar(r, PI - BRANCH_DELTA)?;
    let dn = AnnulusPoint::from_polar(r, -(PI - BRANCH_DELTA))?;
    let on = AnnulusPoint::from_polar(r, PI)?;
    let du = eval_dirichlet(params, &up, SERIES_TOL)?.value;
    let dd = eval_dirichlet(params, &dn, SERIES_TOL)?.value;
    let lu = eval_laurent(params, &up, SERIES_TOL)?.value;
    let ld = eval_laurent(params, &dn, SERIES_TOL)?.value;
    let l = eval_laurent(params, &on, SERIES_TOL)?.value;
    let worst = (du - lu).norm().max((dd - ld).norm()).max(((du + dd) * 0.5 - l).norm());
    Ok(worst / l.norm())
}

pub fn branch_cut_check(params: &[Parameters]) -> CheckResult {
    let out = params.par_iter().map(branch_cut_residual).collect();
    summarize("branch_cut", out)
}

/// Runs every check on the standard grid plus `random_points` seeded samples.
pub fn run_battery(opts: &VerifyOptions) -> VerifyReport {
    let mut samples = standard_grid();
    let random = random_samples(opts.seed, opts.random_points);
    samples.extend(random.iter().copied());
    let mut pairs = standard_params();
    pairs.extend(random.iter().map(|s| s.params));

    let checks = vec![
        contiguity_check(&samples, opts.perturb),
        inversion_check(&samples),
        reflection_check(&pairs),
        q_difference_check(&samples),
        cross_representation_check(&samples),
        integral_check(&samples),
        branch_cut_check(&standard_params()),
    ];
    VerifyReport {
        seed: opts.seed,
        random_points: opts.random_points,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}
