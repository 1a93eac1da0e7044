//! The annulus as a half-plane: Ψ(u, v, z) written as a lacunary Dirichlet
//! series in the variable t_z,
//!
//! Ψ(u, v, z) = (π²/v) e^{(uπi/2v) Log z} Σ_{k∈ℤ} ṽ^{ku} e^{-t_z ṽ^k},
//!
//! with t_z = e^{(πi/2v) Log z} and ṽ = e^{π²/v}. The k < 0 half (S₋) is an
//! entire function of t_z; the k ≥ 0 half (S₊) converges exactly on Re t_z > 0,
//! which is where z lies in the annulus.

use crate::error::{Error, Result};
use crate::gamma::{log_gamma, Parameters};
use crate::laurent::{AnnulusPoint, Method, SeriesEval, TERM_CAP};
use crate::sum::CompensatedSum;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Largest π²/v for which ṽ = e^{π²/v} is a finite double.
const MAX_LOG_Q: f64 = 700.0;

/// Image of a point of the annulus in the right half-plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfPlaneImage {
    pub t_z: Complex64,
    pub v_tilde: f64,
    pub prefactor: Complex64,
}

/// Parameters of S±(u, q, ζ) = Σ q^{ku} e^{-ζ q^k}.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DirichletParams {
    pub u: Complex64,
    pub q: f64,
    pub zeta: Complex64,
}

impl DirichletParams {
    pub fn new(u: Complex64, q: f64, zeta: Complex64) -> Result<Self> {
        let dp = DirichletParams { u, q, zeta };
        dp.check()?;
        Ok(dp)
    }

    fn check(&self) -> Result<()> {
        let finite = self.u.re.is_finite() && self.u.im.is_finite() && self.zeta.re.is_finite() && self.zeta.im.is_finite();
        if !finite {
            return Err(Error::invalid("u and zeta must be finite"));
        }
        if !(self.q > 1.0 && self.q.is_finite()) {
            return Err(Error::invalid(format!("q = {} must be finite and > 1", self.q)));
        }
        if !(self.u.re > 0.0) {
            return Err(Error::invalid(format!("Re u = {} must be positive", self.u.re)));
        }
        Ok(())
    }

    fn with_zeta(&self, zeta: Complex64) -> Self {
        DirichletParams { zeta, ..*self }
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("tol must be a positive number"))
    }
}

/// ln of (t_z, prefactor / (π²/v)) for v > 0.
fn log_image(v: f64, u: Complex64, z: &AnnulusPoint) -> (Complex64, Complex64) {
    let log_z = Complex64::new(z.log_abs(), z.arg());
    let c = Complex64::new(0.0, PI / (2.0 * v));
    (c * log_z, c * u * log_z)
}

/// (t_z, ṽ, prefactor) for v > 0.
pub fn map_to_halfplane(params: &Parameters, z: &AnnulusPoint) -> Result<HalfPlaneImage> {
    let v = params.v;
    if !(v > 0.0) {
        return Err(Error::invalid("the half-plane map needs v > 0"));
    }
    let log_q = PI * PI / v;
    if log_q > MAX_LOG_Q {
        return Err(Error::invalid(format!("v = {v} too small: e^(π²/v) overflows")));
    }
    let (lt, lp) = log_image(v, params.u, z);
    let prefactor = lp.exp() * (PI * PI / v);
    if !(prefactor.re.is_finite() && prefactor.im.is_finite()) {
        return Err(Error::invalid("prefactor overflows for these parameters"));
    }
    Ok(HalfPlaneImage {
        t_z: lt.exp(),
        v_tilde: log_q.exp(),
        prefactor,
    })
}

fn term(dp: &DirichletParams, log_q: f64, k: i32) -> Complex64 {
    let qk = dp.q.powi(k);
    (dp.u * (k as f64 * log_q) - dp.zeta * qk).exp()
}

fn sum_backwards(terms: &[Complex64]) -> Complex64 {
    let mut acc = CompensatedSum::default();
    for t in terms.iter().rev() {
        acc.add(*t);
    }
    acc.value()
}

/// S₋(u, q, ζ) = Σ_{k<0} q^{ku} e^{-ζ q^k}, an entire function of ζ.
///
/// After J terms the rest is bounded by e^{|ζ| q^{-J-1}} q^{-(J+1) Re u} / (1 - q^{-Re u}).
pub fn s_minus(dp: &DirichletParams, tol: f64) -> Result<SeriesEval> {
    dp.check()?;
    check_tol(tol)?;
    let log_q = dp.q.ln();
    let decay = -dp.u.re * log_q;
    let ratio = decay.exp();
    if ratio >= 1.0 - 1e-6 {
        return Err(Error::SlowConvergence {
            terms: 0,
            detail: format!("q^(-Re u) = {ratio} is too close to 1"),
        });
    }
    let az = dp.zeta.norm();
    let tail_after = |j: usize| -> f64 {
        let k = -(j as f64) - 1.0;
        (az * (k * log_q).exp() + k * -decay).exp() / (1.0 - ratio)
    };
    let mut terms = Vec::new();
    while tail_after(terms.len()) > tol {
        if terms.len() >= TERM_CAP {
            return Err(Error::SlowConvergence {
                terms: terms.len(),
                detail: "S- term cap reached".into(),
            });
        }
        let k = -(terms.len() as i32) - 1;
        terms.push(term(dp, log_q, k));
    }
    Ok(SeriesEval {
        value: sum_backwards(&terms),
        n_neg: -(terms.len() as i64),
        n_pos: -1,
        tail_bound: tail_after(terms.len()),
        method: Method::Dirichlet,
    })
}

/// S₊(u, q, ζ) = Σ_{k≥0} q^{ku} e^{-ζ q^k}, for Re ζ > 0.
///
/// The ratio bound r_k = exp(Re u ln q - Re ζ q^k (q - 1)) between consecutive
/// moduli decreases in k, so once r_K < 1 the rest is at most
/// |term_K| / (1 - r_K).
pub fn s_plus(dp: &DirichletParams, tol: f64) -> Result<SeriesEval> {
    dp.check()?;
    check_tol(tol)?;
    let re = dp.zeta.re;
    if !(re > 0.0) {
        return Err(Error::outside(format!("S+ needs Re zeta > 0, got {re}")));
    }
    let log_q = dp.q.ln();
    let cap = 64 + ((702.0 / re).ln() / log_q).ceil().max(0.0) as usize;
    let mut terms = Vec::new();
    loop {
        let k = terms.len();
        let qk = dp.q.powi(k as i32);
        let t = term(dp, log_q, k as i32);
        let log_r = dp.u.re * log_q - re * qk * (dp.q - 1.0);
        if log_r < 0.0 {
            let bound = t.norm() / (1.0 - log_r.exp());
            if bound <= tol {
                return Ok(SeriesEval {
                    value: sum_backwards(&terms),
                    n_neg: 0,
                    n_pos: k as i64 - 1,
                    tail_bound: bound,
                    method: Method::Dirichlet,
                });
            }
        }
        if k >= cap {
            return Err(Error::SlowConvergence {
                terms: k,
                detail: format!("S+ term cap {cap} reached at Re zeta = {re:e}"),
            });
        }
        terms.push(t);
    }
}

/// Ψ(u, v, z) through the Dirichlet form. Needs Re u > 0; v < 0 is reduced to
/// v > 0 by Ψ(u, v, z) = Ψ(u, -v, 1/z).
pub fn eval_dirichlet(params: &Parameters, z: &AnnulusPoint, tol: f64) -> Result<SeriesEval> {
    check_tol(tol)?;
    if !(params.u.re > 0.0) {
        return Err(Error::invalid(format!("the Dirichlet form needs Re u > 0, got {}", params.u.re)));
    }
    if !z.in_annulus(params.v) {
        return Err(Error::outside(format!(
            "|ln|z|| = {} is not below |v| = {}",
            z.log_abs().abs(),
            params.v.abs()
        )));
    }
    let (params, z) = if params.v < 0.0 {
        (params.with_v(-params.v), z.inverse())
    } else {
        (*params, *z)
    };
    let img = map_to_halfplane(&params, &z)?;
    let scale = log_gamma(params.u)?.to_complex().norm().min(1.0);
    let inner = (tol * scale / (2.0 * img.prefactor.norm())).max(f64::MIN_POSITIVE);
    let dp = DirichletParams::new(params.u, img.v_tilde, img.t_z)?;
    let sm = s_minus(&dp, inner)?;
    let sp = s_plus(&dp, inner)?;
    Ok(SeriesEval {
        value: img.prefactor * (sm.value + sp.value),
        n_neg: sm.n_neg,
        n_pos: sp.n_pos,
        tail_bound: img.prefactor.norm() * (sm.tail_bound + sp.tail_bound),
        method: Method::Dirichlet,
    })
}

/// The poles t_z ṽ^k, k_lo ≤ k ≤ k_hi, of the integrand of the contour form.
/// Each point p is checked against 1 - z e^{(2iv/π) Log p} = 0.
pub fn pole_spiral(params: &Parameters, z: &AnnulusPoint, k_lo: i64, k_hi: i64) -> Result<Vec<Complex64>> {
    if k_lo > k_hi {
        return Err(Error::invalid("empty index range"));
    }
    let img = map_to_halfplane(params, z)?;
    let (lt, _) = log_image(params.v, params.u, z);
    let log_q = PI * PI / params.v;
    let reach = lt.re.abs() + k_lo.unsigned_abs().max(k_hi.unsigned_abs()) as f64 * log_q;
    if reach > MAX_LOG_Q {
        return Err(Error::invalid("spiral points beyond this index range overflow"));
    }
    let w = Complex64::new(0.0, 2.0 * params.v / PI);
    (k_lo..=k_hi)
        .map(|k| {
            let p = img.t_z * img.v_tilde.powi(k as i32);
            let r = (1.0 - z.z() * (w * p.ln()).exp()).norm();
            if r < 1e-10 {
                Ok(p)
            } else {
                Err(Error::invalid(format!("spiral point k = {k} has residual {r:e}")))
            }
        })
        .collect()
}

/// Residuals of the q-difference equations
///
/// q^u S₋(qζ) - S₋(ζ) = e^{-ζ},  q^u S₊(qζ) - S₊(ζ) = -e^{-ζ},  q^u S(qζ) = S(ζ).
///
/// The first two are relative to |e^{-ζ}|, the last to |S(ζ)|.
pub fn functional_residuals(u: Complex64, q: f64, zeta: Complex64, tol: f64) -> Result<(f64, f64, f64)> {
    check_tol(tol)?;
    let dp = DirichletParams::new(u, q, zeta)?;
    let e = (-zeta).exp();
    let qz = dp.with_zeta(zeta * q);
    let qu = (u * q.ln()).exp();
    let sums = |inner: f64| -> Result<[Complex64; 4]> {
        Ok([
            s_minus(&dp, inner)?.value,
            s_minus(&qz, inner)?.value,
            s_plus(&dp, inner)?.value,
            s_plus(&qz, inner)?.value,
        ])
    };
    // each residual picks up (1 + |q^u|) times the per-sum tail
    let mut inner = (tol * e.norm().min(1.0) / (4.0 * (1.0 + qu.norm()))).max(f64::MIN_POSITIVE);
    let mut s = sums(inner)?;
    let small = (s[0] + s[2]).norm();
    if small < e.norm().min(1.0) {
        inner = (inner * small / e.norm().min(1.0)).max(f64::MIN_POSITIVE);
        s = sums(inner)?;
    }
    let [m0, m1, p0, p1] = s;
    let r_minus = (qu * m1 - m0 - e).norm() / e.norm();
    let r_plus = (qu * p1 - p0 + e).norm() / e.norm();
    let s0 = m0 + p0;
    let r_total = (qu * (m1 + p1) - s0).norm() / s0.norm();
    Ok((r_minus, r_plus, r_total))
}
