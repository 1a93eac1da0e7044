//! Complex log-Gamma on vertical lines.
//!
//! `log_gamma` runs a 12-term Stirling series at |w| >= 12, reached from
//! smaller arguments by upward recurrence. The large terms `(w - ½) Log w - w`
//! are formed in double-double, so the phase of Γ(x + iy) stays accurate to
//! ~1e-14 absolute for |y| up to 10⁶, where `y ln y` already exceeds 10⁷.
//! Left of Re z = ½ near the real axis the reflection formula takes over.

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::logcomplex::LogComplex;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Coordinate-wise distance from a non-positive integer treated as a pole.
pub const POLE_TOL: f64 = 1e-12;
/// Distance from the excluded lattice `-ℕ + (2vi/π)ℤ` treated as a hit.
pub const LATTICE_TOL: f64 = 1e-10;
/// Distance below which a valid parameter pair is flagged as ill-conditioned.
pub const LATTICE_WARN: f64 = 1e-6;

const STIRLING_MIN_ABS: f64 = 17.0;

/// B_{2k} / (2k (2k-1)), k = 1..=15, as exact numerator and denominator.
const STIRLING_COEFFS: [(f64, f64); 15] = [
    (1.0, 12.0),
    (-1.0, 360.0),
    (1.0, 1260.0),
    (-1.0, 1680.0),
    (1.0, 1188.0),
    (-691.0, 360360.0),
    (1.0, 156.0),
    (-3617.0, 122400.0),
    (43867.0, 244188.0),
    (-174611.0, 125400.0),
    (77683.0, 5796.0),
    (-236364091.0, 1506960.0),
    (657931.0, 300.0),
    (-3392780147.0, 93960.0),
    (1723168255201.0, 2492028.0),
];

/// The pair `(u, v)` indexing Ψ(u, v, z) = Σ Γ(u + 2ivn/π) zⁿ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub u: Complex64,
    pub v: f64,
}

impl Parameters {
    /// Rejects `v = 0` and non-finite input. Lattice membership is checked
    /// separately by [`validate_params`].
    pub fn new(u: Complex64, v: f64) -> Result<Self> {
        if !(u.re.is_finite() && u.im.is_finite() && v.is_finite()) {
            return Err(Error::invalid("u and v must be finite"));
        }
        if v == 0.0 {
            return Err(Error::invalid("v must be nonzero"));
        }
        Ok(Parameters { u, v })
    }

    /// 2v/π, the spacing of the coefficient arguments along the vertical line.
    pub fn step(&self) -> f64 {
        2.0 * self.v / PI
    }

    /// u + 2ivn/π
    pub fn coefficient_argument(&self, n: i64) -> Complex64 {
        Complex64::new(self.u.re, self.u.im + self.step() * n as f64)
    }

    /// (2v/π) n + Im u in double-double, so that far-out coefficient
    /// arguments are not limited by the rounding of 2v/π.
    pub(crate) fn coefficient_im_dd(&self, n: i64) -> Dd {
        let step = Dd::new(2.0 * self.v) / Dd::PI;
        (step.mul_f64(n as f64)).add_f64(self.u.im)
    }

    pub fn with_u(&self, u: Complex64) -> Self {
        Parameters { u, v: self.v }
    }

    pub fn with_v(&self, v: f64) -> Self {
        Parameters { u: self.u, v }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub valid: bool,
    /// `(m, k)` with `u + 2ivk/π` within [`LATTICE_TOL`] of `-m`.
    pub offending: Option<(u64, i64)>,
    /// Distance from `u` to the nearest excluded lattice point considered.
    pub lattice_distance: f64,
    /// Valid, but closer than [`LATTICE_WARN`] to the lattice.
    pub near_lattice: bool,
}

impl ValidityReport {
    pub fn into_result(self) -> Result<()> {
        match self.offending {
            None => Ok(()),
            Some((m, k)) => Err(Error::InvalidParameters {
                reason: format!("u + 2ivk/π hits -{m} at k = {k}"),
                lattice: Some((m, k)),
            }),
        }
    }
}

/// Checks u ∉ -ℕ + (2vi/π)ℤ: no coefficient Γ(u + 2ivk/π), k ∈ ℤ, sits on a pole.
pub fn validate_params(params: &Parameters) -> ValidityReport {
    lattice_check(params, None)
}

/// The one-sided condition -u ∉ ℕ + (2iv/π)ℕ: only indices k >= 0 matter.
pub fn validate_params_nonnegative(params: &Parameters) -> ValidityReport {
    lattice_check(params, Some(0))
}

fn lattice_check(params: &Parameters, min_index: Option<i64>) -> ValidityReport {
    let step = params.step();
    let u = params.u;
    let m = if u.re < 0.0 { (-u.re).round() } else { 0.0 };
    let k_star = -u.im / step;
    let mut best = (f64::INFINITY, 0i64);
    if k_star.is_finite() && k_star.abs() < 9.0e15 {
        let lo = k_star.floor() as i64 - 1;
        let hi = k_star.ceil() as i64 + 1;
        for k in lo..=hi {
            if min_index.is_some_and(|lo| k < lo) {
                continue;
            }
            let d = Complex64::new(u.re + m, u.im + step * k as f64).norm();
            if d < best.0 {
                best = (d, k);
            }
        }
    }
    let hit = best.0 <= LATTICE_TOL;
    ValidityReport {
        valid: !hit,
        offending: hit.then_some((m as u64, best.1)),
        lattice_distance: best.0,
        near_lattice: !hit && best.0 < LATTICE_WARN,
    }
}

/// ln Γ(z) as `(ln|Γ|, arg Γ)` with the argument reduced into (-π, π].
pub fn log_gamma(z: Complex64) -> Result<LogComplex> {
    let (re, im) = log_gamma_dd(z)?;
    Ok(LogComplex {
        log_modulus: re.to_f64(),
        argument: im.rem_two_pi(),
    })
}

/// Same as [`log_gamma`] but keeps both parts in double-double, with the
/// imaginary part unreduced.
pub(crate) fn log_gamma_dd(z: Complex64) -> Result<(Dd, Dd)> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::invalid("non-finite Gamma argument"));
    }
    if z.im < 0.0 {
        let (re, im) = log_gamma_dd(z.conj())?;
        return Ok((re, -im));
    }
    let (x, y) = (z.re, z.im);
    if y <= POLE_TOL && x < 0.5 {
        let n = x.round();
        if n <= 0.0 && (x - n).abs() <= POLE_TOL {
            return Err(Error::GammaPole { re: x, im: y });
        }
    }
    if x >= 0.5 || (y >= 1.0 && x > -20.0) {
        return Ok(shifted_stirling(Dd::new(x), y));
    }
    // ln Γ(z) = ln π - ln sin(πz) - ln Γ(1 - z)
    let (gr, gi) = shifted_stirling(Dd::sum(1.0, -x), -y);
    let (sr, si) = ln_sin_pi(x, y);
    Ok((Dd::LN_PI - sr - gr, -(si + gi)))
}

fn shifted_stirling(mut x: Dd, y: f64) -> (Dd, Dd) {
    // Π (z + k) in double-double complex
    let (mut pr, mut pi) = (Dd::ONE, Dd::ZERO);
    let mut shifted = false;
    while x.hi < 0.5 || x.hi * x.hi + y * y < STIRLING_MIN_ABS * STIRLING_MIN_ABS {
        (pr, pi) = (pr * x - pi.mul_f64(y), pr.mul_f64(y) + pi * x);
        x = x.add_f64(1.0);
        shifted = true;
    }
    let (re, im) = stirling(x, y, STIRLING_COEFFS.len());
    if shifted {
        let ln_abs = (pr.sqr() + pi.sqr()).ln().ldexp(-1);
        (re - ln_abs, im - Dd::atan2(pi, pr))
    } else {
        (re, im)
    }
}

/// (w - ½) Log w - w + ½ ln 2π + Σ_{k<terms} B_{2k}/(2k(2k-1) w^{2k-1}).
fn stirling(x: Dd, y: f64, terms: usize) -> (Dd, Dd) {
    let r2 = x.sqr() + Dd::prod(y, y);
    let ln_r = r2.ln().ldexp(-1);
    let theta = Dd::atan2(Dd::new(y), x);
    let xm = x.add_f64(-0.5);
    let re = xm * ln_r - theta.mul_f64(y) - x + Dd::HALF_LN_2PI;
    let im = ln_r.mul_f64(y) + xm * theta - Dd::new(y);

    // 1/w = (x - iy) / |w|², then Horner in 1/w² in double-double
    let (ar, ai) = (x / r2, Dd::new(-y) / r2);
    let (br, bi) = (ar.sqr() - ai.sqr(), (ar * ai).ldexp(1));
    let (mut sr, mut si) = (Dd::ZERO, Dd::ZERO);
    for &(num, den) in STIRLING_COEFFS[..terms].iter().rev() {
        (sr, si) = (sr * br - si * bi + Dd::new(num) / Dd::new(den), sr * bi + si * br);
    }
    (re + (sr * ar - si * ai), im + (sr * ai + si * ar))
}

/// ln sin(π(x + iy)) for y >= 0, imaginary part unreduced.
fn ln_sin_pi(x: f64, y: f64) -> (Dd, Dd) {
    let n0 = x.round();
    let xr = x - n0;
    let parity = Dd::PI.mul_f64(n0);
    if y < 1.0 {
        // sin(π(xr + iy)) = sin πxr cosh πy + i cos πxr sinh πy
        let (sx, cx) = Dd::PI.mul_f64(xr).sin_cos();
        let e = Dd::PI.mul_f64(y).exp();
        let ei = Dd::ONE / e;
        let re = sx * (e + ei).ldexp(-1);
        let im = cx * (e - ei).ldexp(-1);
        ((re.sqr() + im.sqr()).ln().ldexp(-1), parity + Dd::atan2(im, re))
    } else {
        // sin(πζ) = (i/2) e^{-iπζ} (1 - e^{2πiζ})
        let e = Complex64::from_polar((-2.0 * PI * y).exp(), 2.0 * PI * xr);
        let l = (Complex64::new(1.0, 0.0) - e).ln();
        let re = Dd::PI.mul_f64(y) - Dd::LN_2 + Dd::new(l.re);
        let im = Dd::HALF_PI - Dd::PI.mul_f64(xr) + Dd::new(l.im) + parity;
        (re, im)
    }
}

/// ψ(w) to about 1e-10 relative, used only for first-order corrections.
fn digamma(w: Complex64) -> Complex64 {
    let mut w = w;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.norm() < 12.0 {
        acc -= w.inv();
        w += 1.0;
    }
    let r = w.inv();
    let r2 = r * r;
    acc + w.ln() - r * 0.5 - r2 * (1.0 / 12.0 - r2 * (1.0 / 120.0 - r2 / 252.0))
}

/// ln Γ(u + 2ivn/π) in double-double. The argument is formed in
/// double-double and rounded; the rounding is put back to first order
/// through ψ, which keeps the phase of far-out coefficients exact to ~1e-16.
pub(crate) fn coefficient_log_gamma_dd(params: &Parameters, n: i64) -> Result<(Dd, Dd)> {
    let y = params.coefficient_im_dd(n);
    let w = Complex64::new(params.u.re, y.hi);
    let (re, im) = log_gamma_dd(w)?;
    if y.lo == 0.0 {
        return Ok((re, im));
    }
    // d lnΓ = ψ(w) · i δ
    let d = digamma(w) * Complex64::new(0.0, y.lo);
    Ok((re.add_f64(d.re), im.add_f64(d.im)))
}

/// Coefficients ln Γ(u + 2ivn/π) for n in `n_lo..=n_hi`.
pub fn gamma_vertical(params: &Parameters, n_lo: i64, n_hi: i64) -> Result<Vec<(i64, LogComplex)>> {
    if n_lo > n_hi {
        return Err(Error::invalid(format!("empty index range {n_lo}..={n_hi}")));
    }
    let eval = |n: i64| {
        coefficient_log_gamma_dd(params, n).map(|(re, im)| {
            (
                n,
                LogComplex {
                    log_modulus: re.to_f64(),
                    argument: im.rem_two_pi(),
                },
            )
        })
    };
    if n_hi - n_lo < 2048 {
        (n_lo..=n_hi).map(eval).collect()
    } else {
        (n_lo..=n_hi).into_par_iter().map(eval).collect()
    }
}

/// Leading Stirling form of ln Γ(u + 2ivn/π) with the first correction term
/// 1/(12w). Used as an oracle for large-n tests and for phase analysis.
pub fn asymptotic_log_gamma(params: &Parameters, n: i64) -> Result<LogComplex> {
    if n < 1 {
        return Err(Error::invalid("asymptotic form needs n >= 1"));
    }
    let w = params.coefficient_argument(n);
    let (re, im) = asymptotic_dd(w);
    Ok(LogComplex {
        log_modulus: re.to_f64(),
        argument: im.rem_two_pi(),
    })
}

pub(crate) fn asymptotic_dd(w: Complex64) -> (Dd, Dd) {
    stirling(Dd::new(w.re), w.im, 1)
}
