//! Instruments for the boundary of the annulus: radial probes, the phase law
//! of the coefficients and the gap condition on the Dirichlet frequencies.
//! Nothing here claims divergence; the output is diagnostic.

use crate::dirichlet::{eval_dirichlet, map_to_halfplane};
use crate::error::{Error, Result};
use crate::gamma::{asymptotic_log_gamma, log_gamma, Parameters};
use crate::laurent::{AnnulusPoint, Method};
use crate::logcomplex::{circle_distance, principal_angle};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Tolerance used for each probe evaluation.
pub const PROBE_TOL: f64 = 1e-12;

/// Values of Ψ along the ray arg z = θ toward |z| = e^v.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub direction: f64,
    pub radii: Vec<f64>,
    /// NaN where the evaluation failed; see `errors`.
    pub values: Vec<Complex64>,
    pub tail_bounds: Vec<f64>,
    /// Terms of the k ≥ 0 half of the Dirichlet sum.
    pub term_counts: Vec<usize>,
    pub arg_t: Vec<f64>,
    pub errors: Vec<Option<String>>,
    pub method_tag: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseRecord {
    pub n: i64,
    pub phi: f64,
    pub delta_model: f64,
    pub delta_observed: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseReport {
    pub records: Vec<PhaseRecord>,
    /// max n · residual over the records.
    pub fitted_constant: f64,
    /// From this index on, phases come from the Stirling form.
    pub switch_index: i64,
    /// Largest circle distance between direct and Stirling phases on the ten
    /// indices below `switch_index`.
    pub overlap_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    pub q: f64,
    pub k_max: i64,
    /// λ_k = q^k for k = 0..=k_max (may overflow to infinity for large q).
    pub lambdas: Vec<f64>,
    /// λ_{k+1} - λ_k for k = 0..k_max.
    pub gaps: Vec<f64>,
    /// ln(λ_{k+1} - λ_k) = k ln q + ln(q - 1), never overflows.
    pub log_gaps: Vec<f64>,
    pub strictly_increasing: bool,
    pub gaps_increasing: bool,
    /// Gaps grow without bound, i.e. the gap hypothesis holds.
    pub holds: bool,
}

impl GapReport {
    /// First k with λ_{k+1} - λ_k ≥ m: ⌈log_q(m / (q - 1))⌉, at least 0.
    pub fn first_index_exceeding(&self, m: f64) -> i64 {
        ((m / (self.q - 1.0)).ln() / self.q.ln()).ceil().max(0.0) as i64
    }
}

fn positive_v(params: &Parameters) -> Result<()> {
    if params.v > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("boundary instruments need v > 0"))
    }
}

/// Ψ at radii e^{v(1 - 2^{-j})}, j = 1..=r_count, stopping before 2^{-j}
/// drops below `closeness`. Failures are recorded per radius.
pub fn radial_probe(params: &Parameters, theta: f64, r_count: usize, closeness: f64) -> Result<ProbeReport> {
    positive_v(params)?;
    if !(params.u.re > 0.0) {
        return Err(Error::invalid("radial probes use the Dirichlet form and need Re u > 0"));
    }
    if !(closeness > 0.0 && closeness < 1.0) || !theta.is_finite() {
        return Err(Error::invalid("closeness must lie in (0, 1) and theta must be finite"));
    }
    let v = params.v;
    let mut report = ProbeReport {
        direction: principal_angle(theta),
        radii: Vec::new(),
        values: Vec::new(),
        tail_bounds: Vec::new(),
        term_counts: Vec::new(),
        arg_t: Vec::new(),
        errors: Vec::new(),
        method_tag: Method::Dirichlet,
    };
    for j in 1..=r_count.min(1000) {
        let gap = 0.5f64.powi(j as i32);
        if gap < closeness {
            break;
        }
        let r = (v * (1.0 - gap)).exp();
        let z = AnnulusPoint::from_polar(r, theta)?;
        report.radii.push(r);
        report.arg_t.push(map_to_halfplane(params, &z)?.t_z.arg());
        match eval_dirichlet(params, &z, PROBE_TOL) {
            Ok(s) => {
                report.values.push(s.value);
                report.tail_bounds.push(s.tail_bound);
                report.term_counts.push((s.n_pos + 1) as usize);
                report.errors.push(None);
            }
            Err(e) => {
                report.values.push(Complex64::new(f64::NAN, f64::NAN));
                report.tail_bounds.push(f64::NAN);
                report.term_counts.push(0);
                report.errors.push(Some(e.code().to_string()));
            }
        }
    }
    Ok(report)
}

/// φ(n) = arg Γ(u + 2ivn/π) against the increment law
/// φ(n+1) - φ(n) ≈ (2v/π) ln(2vn/π) mod 2π, for n_lo ≤ n ≤ n_hi.
pub fn phase_increments(params: &Parameters, n_lo: i64, n_hi: i64) -> Result<PhaseReport> {
    positive_v(params)?;
    if n_lo < 1 || n_hi < n_lo {
        return Err(Error::invalid("need 1 <= n_lo <= n_hi"));
    }
    if n_hi > 100_000_000 {
        return Err(Error::invalid("n_hi above 1e8"));
    }
    let step = params.step();
    // past this index e^{-vn} is below the smallest double
    let switch = ((700.0 / params.v).ceil() as i64).max(11);
    let phase = |n: i64| -> Result<f64> {
        if n >= switch {
            Ok(asymptotic_log_gamma(params, n)?.argument)
        } else {
            Ok(log_gamma(params.coefficient_argument(n))?.argument)
        }
    };
    let mut overlap = 0.0f64;
    for n in switch - 10..switch {
        let direct = log_gamma(params.coefficient_argument(n))?.argument;
        let stirling = asymptotic_log_gamma(params, n)?.argument;
        overlap = overlap.max(circle_distance(direct, stirling));
    }
    let mut records = Vec::with_capacity((n_hi - n_lo + 1) as usize);
    let mut fitted = 0.0f64;
    let mut prev = phase(n_lo)?;
    for n in n_lo..=n_hi {
        let next = phase(n + 1)?;
        let delta_model = principal_angle(step * (step * n as f64).ln());
        let delta_observed = principal_angle(next - prev);
        let residual = circle_distance(delta_model, delta_observed);
        fitted = fitted.max(n as f64 * residual);
        records.push(PhaseRecord {
            n,
            phi: prev,
            delta_model,
            delta_observed,
            residual,
        });
        prev = next;
    }
    Ok(PhaseReport {
        records,
        fitted_constant: fitted,
        switch_index: switch,
        overlap_residual: overlap,
    })
}

/// The frequencies λ_k = q^k and their gaps q^k (q - 1).
pub fn gap_check(q: f64, k_max: i64) -> Result<GapReport> {
    if !(q > 1.0 && q.is_finite()) {
        return Err(Error::invalid(format!("q = {q} must be finite and > 1")));
    }
    if !(2..=100_000).contains(&k_max) {
        return Err(Error::invalid("k_max must lie in 2..=100000"));
    }
    let lq = q.ln();
    let lg = (q - 1.0).ln();
    let lambdas: Vec<f64> = (0..=k_max).map(|k| q.powi(k as i32)).collect();
    let gaps: Vec<f64> = (0..k_max).map(|k| lambdas[k as usize] * (q - 1.0)).collect();
    let log_gaps: Vec<f64> = (0..k_max).map(|k| k as f64 * lq + lg).collect();
    let strictly_increasing = lambdas.windows(2).all(|w| w[1] > w[0] || w[0].is_infinite());
    let gaps_increasing = log_gaps.windows(2).all(|w| w[1] > w[0]);
    Ok(GapReport {
        q,
        k_max,
        lambdas,
        gaps,
        log_gaps,
        strictly_increasing,
        gaps_increasing,
        holds: strictly_increasing && gaps_increasing && lq > 0.0,
    })
}

/// (v - |ln|z||, cos(π ln|z| / 2v)): distance to the boundary in log-radius,
/// and Re t_z / |t_z|, the same distance seen from the half-plane.
pub fn boundary_distance_map(params: &Parameters, z: &AnnulusPoint) -> Result<(f64, f64)> {
    positive_v(params)?;
    if !z.in_annulus(params.v) {
        return Err(Error::outside(format!("|ln|z|| = {} is not below v = {}", z.log_abs().abs(), params.v)));
    }
    let d = params.v - z.log_abs().abs();
    Ok((d, (PI * z.log_abs() / (2.0 * params.v)).cos()))
}
