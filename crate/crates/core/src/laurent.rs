//! Direct evaluation of Ψ(u, v, z) = Σ_{n∈ℤ} Γ(u + 2ivn/π) zⁿ and of the two
//! one-sided power series, with certified tails, plus the identity residuals
//! that tie them together.
//!
//! Tail certificate. Stirling gives |Γ(u + 2ivn/π)| ≍ L |n|^{Re u - ½} e^{-|v n|}.
//! Each side tracks f(n) = |term_n| / (nᵅ ρⁿ), where ρ is the geometric ratio
//! of that side, and bounds every omitted term by 2·max f times nᵅ ρⁿ. Summed
//! as a geometric series, that bound is the reported `tail_bound`. The bound is
//! only trusted once the coefficient arguments have left the small-|Im| region
//! where Stirling is not yet accurate.

use crate::error::{Error, Result};
use crate::gamma::{coefficient_log_gamma_dd, log_gamma_dd, validate_params, validate_params_nonnegative, Parameters};
use crate::dd::{Dd, DdComplex};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Hard cap on terms per side before giving up with `SlowConvergence`.
pub const TERM_CAP: usize = 1_000_000;

/// A nonzero point `z` with cached `ln|z|` and `arg z ∈ (-π, π]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnulusPoint {
    z: Complex64,
    log_abs: f64,
    arg: f64,
}

impl AnnulusPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::invalid("z must be finite"));
        }
        if z.re == 0.0 && z.im == 0.0 {
            return Err(Error::outside("z = 0"));
        }
        let mut arg = z.im.atan2(z.re);
        if arg <= -PI {
            arg = PI;
        }
        Ok(AnnulusPoint {
            z,
            log_abs: z.norm().ln(),
            arg,
        })
    }

    /// `r e^{iθ}` with θ taken modulo 2π into (-π, π]. `r` must be positive.
    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        if !(r > 0.0 && r.is_finite() && theta.is_finite()) {
            return Err(Error::invalid("polar point needs finite r > 0"));
        }
        let arg = crate::logcomplex::principal_angle(theta);
        Ok(AnnulusPoint {
            z: Complex64::from_polar(r, arg),
            log_abs: r.ln(),
            arg,
        })
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn log_abs(&self) -> f64 {
        self.log_abs
    }

    pub fn arg(&self) -> f64 {
        self.arg
    }

    /// Membership in C_v = {e^{-|v|} < |z| < e^{|v|}}.
    pub fn in_annulus(&self, v: f64) -> bool {
        self.log_abs.abs() < v.abs()
    }

    /// 1/z, keeping arg in (-π, π] (arg z = π maps to π).
    pub fn inverse(&self) -> Self {
        let arg = if self.arg == PI { PI } else { -self.arg };
        AnnulusPoint {
            z: self.z.inv(),
            log_abs: -self.log_abs,
            arg,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Laurent,
    Power,
    Reciprocal,
    Dirichlet,
    Integral,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Laurent => "laurent",
            Method::Power => "power",
            Method::Reciprocal => "reciprocal",
            Method::Dirichlet => "dirichlet",
            Method::Integral => "integral",
        }
    }
}

/// A series value with its truncation record.
///
/// `tail_bound` bounds the modulus of everything omitted. On success it is at
/// most `tol · min(1, |c₀|)` where c₀ is the central coefficient, hence never
/// above `tol`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesEval {
    pub value: Complex64,
    /// Most negative index summed (0 for one-sided series).
    pub n_neg: i64,
    /// Largest index summed; node count for quadrature.
    pub n_pos: i64,
    pub tail_bound: f64,
    pub method: Method,
}

impl SeriesEval {
    pub fn terms(&self) -> i64 {
        self.n_pos - self.n_neg + 1
    }

    /// Truncation order max(n_pos, |n_neg|).
    pub fn order(&self) -> i64 {
        self.n_pos.max(-self.n_neg)
    }
}

/// Test hook: scale one coefficient, to check that the residual checks
/// actually notice a broken series.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct EvalOptions {
    pub perturb: Option<(i64, f64)>,
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("tol must be a positive number"))
    }
}

/// ln of a coefficient in double-double, `None` for an exact zero.
type LnCoef = Option<(Dd, Dd)>;

/// One side (n > 0 or n < 0) of a series Σ c_n zⁿ in log form. Terms are
/// formed and kept in double-double: where Ψ is much smaller than its largest
/// terms, rounding each term to a double would cost that ratio in accuracy.
struct Side<F> {
    coef: F,
    dir: i64,
    log_r: f64,
    arg: f64,
    sigma: f64,
    log_rho: f64,
    derivative: bool,
    n_min: usize,
    terms: Vec<DdComplex>,
    max_log_f: f64,
}

impl<F: Fn(i64) -> Result<LnCoef>> Side<F> {
    fn push(&mut self) -> Result<()> {
        let n = self.terms.len() + 1;
        if n > TERM_CAP {
            return Err(Error::SlowConvergence {
                terms: n - 1,
                detail: "term cap reached; the point is too close to the boundary for direct summation".into(),
            });
        }
        let nf = n as f64;
        let term = match (self.coef)(self.dir * n as i64)? {
            None => DdComplex::default(),
            Some((clm, carg)) => {
                let mut lm = clm + Dd::prod(nf, self.log_r);
                let mut ang = carg + Dd::prod(nf, self.arg);
                if self.derivative {
                    lm = lm + Dd::new(nf).ln();
                    if self.dir < 0 {
                        ang = ang + Dd::PI;
                    }
                }
                let log_f = lm.to_f64() - self.sigma * nf.ln() - nf * self.log_rho;
                self.max_log_f = self.max_log_f.max(log_f);
                DdComplex::from_ln(lm, ang)
            }
        };
        self.terms.push(term);
        Ok(())
    }

    fn tail(&self) -> f64 {
        let n = self.terms.len();
        if n < self.n_min {
            return f64::INFINITY;
        }
        if self.max_log_f == f64::NEG_INFINITY {
            return 0.0;
        }
        let n1 = (n + 1) as f64;
        let growth = if self.sigma > 0.0 {
            ((n1 + 1.0) / n1).powf(self.sigma)
        } else {
            1.0
        };
        let ratio = self.log_rho.exp() * growth;
        if ratio >= 1.0 {
            return f64::INFINITY;
        }
        let log_tail = std::f64::consts::LN_2 + self.max_log_f + self.sigma * n1.ln() + n1 * self.log_rho
            - (1.0 - ratio).ln();
        log_tail.exp()
    }
}

/// Smallest index at which u + 2ivn/π is far enough up the vertical line for
/// the Stirling envelope to hold.
fn stirling_onset(params: &Parameters) -> usize {
    let need = 10.0 + 2.0 * params.u.norm() + params.u.im.abs();
    let n = (need / params.step().abs()).ceil();
    (n.max(4.0)).min(TERM_CAP as f64 + 1.0) as usize
}

fn gamma_coef(params: Parameters, opts: EvalOptions) -> impl Fn(i64) -> Result<LnCoef> {
    move |n| {
        let (mut lm, arg) = coefficient_log_gamma_dd(&params, n)?;
        if let Some((k, f)) = opts.perturb {
            if k == n {
                if f == 0.0 {
                    return Ok(None);
                }
                lm = lm.add_f64(f.abs().ln());
                if f < 0.0 {
                    return Ok(Some((lm, arg + Dd::PI)));
                }
            }
        }
        Ok(Some((lm, arg)))
    }
}

fn center_value(c: LnCoef) -> DdComplex {
    c.map_or(DdComplex::default(), |(lm, arg)| DdComplex::from_ln(lm, arg))
}

struct SideSpec {
    dir: i64,
    sigma: f64,
    log_rho: f64,
}

fn make_side<F>(coef: F, spec: SideSpec, z: &AnnulusPoint, derivative: bool, n_min: usize) -> Side<F> {
    Side {
        coef,
        dir: spec.dir,
        log_r: spec.dir as f64 * z.log_abs,
        arg: spec.dir as f64 * z.arg,
        sigma: spec.sigma + if derivative { 1.0 } else { 0.0 },
        log_rho: spec.log_rho,
        derivative,
        n_min,
        terms: Vec::new(),
        max_log_f: f64::NEG_INFINITY,
    }
}

/// Drives one or two sides until each tail fits its share of `budget`, then
/// sums everything smallest-first.
fn run_sides<F, G>(
    center: DdComplex,
    mut pos: Side<F>,
    mut neg: Option<Side<G>>,
    budget: f64,
) -> Result<(Complex64, usize, usize, f64)>
where
    F: Fn(i64) -> Result<LnCoef>,
    G: Fn(i64) -> Result<LnCoef>,
{
    let share = if neg.is_some() { 0.5 * budget } else { budget };
    while pos.tail() > share {
        pos.push()?;
    }
    if let Some(s) = neg.as_mut() {
        while s.tail() > share {
            s.push()?;
        }
    }
    let np = pos.terms.len();
    let nn = neg.as_ref().map_or(0, |s| s.terms.len());
    let mut acc = DdComplex::default();
    for i in (0..np.max(nn)).rev() {
        if let Some(t) = pos.terms.get(i) {
            acc = acc + *t;
        }
        if let Some(t) = neg.as_ref().and_then(|s| s.terms.get(i)) {
            acc = acc + *t;
        }
    }
    acc = acc + center;
    let tail = pos.tail() + neg.as_ref().map_or(0.0, |s| s.tail());
    Ok((acc.to_complex(), np, nn, tail))
}

/// tol · min(1, |c₀|): absolute for large series, relative to the central
/// coefficient for small ones, and independent of z.
fn budget(tol: f64, c0: Complex64) -> f64 {
    let a = c0.norm();
    if a > 0.0 {
        tol * a.min(1.0)
    } else {
        tol
    }
}

/// Ψ(u, v, z) by direct two-sided summation.
pub fn eval_laurent(params: &Parameters, z: &AnnulusPoint, tol: f64) -> Result<SeriesEval> {
    eval_laurent_with(params, z, tol, EvalOptions::default())
}

pub fn eval_laurent_with(params: &Parameters, z: &AnnulusPoint, tol: f64, opts: EvalOptions) -> Result<SeriesEval> {
    laurent_series(params, z, tol, opts, false).map(|(value, np, nn, tail_bound)| SeriesEval {
        value,
        n_neg: -(nn as i64),
        n_pos: np as i64,
        tail_bound,
        method: Method::Laurent,
    })
}

fn laurent_series(
    params: &Parameters,
    z: &AnnulusPoint,
    tol: f64,
    opts: EvalOptions,
    derivative: bool,
) -> Result<(Complex64, usize, usize, f64)> {
    check_tol(tol)?;
    validate_params(params).into_result()?;
    if !z.in_annulus(params.v) {
        return Err(Error::outside(format!(
            "|ln|z|| = {} is not below |v| = {}",
            z.log_abs.abs(),
            params.v.abs()
        )));
    }
    let av = params.v.abs();
    let sigma = params.u.re - 0.5;
    let n_min = stirling_onset(params);
    let c0 = center_value(gamma_coef(*params, opts)(0)?);
    let center = if derivative { DdComplex::default() } else { c0 };
    // terms decay like e^{-n (|v| - |ln|z||)}; refuse up front what the cap cannot reach
    let predicted = (1.0 / budget(tol, c0.to_complex())).ln() / (av - z.log_abs.abs());
    if n_min > TERM_CAP || predicted > TERM_CAP as f64 {
        return Err(Error::SlowConvergence {
            terms: n_min.max(predicted.min(usize::MAX as f64) as usize),
            detail: "too close to the boundary for direct summation".into(),
        });
    }
    let pos = make_side(
        gamma_coef(*params, opts),
        SideSpec { dir: 1, sigma, log_rho: z.log_abs - av },
        z,
        derivative,
        n_min,
    );
    let neg = make_side(
        gamma_coef(*params, opts),
        SideSpec { dir: -1, sigma, log_rho: -z.log_abs - av },
        z,
        derivative,
        n_min,
    );
    run_sides(center, pos, Some(neg), budget(tol, c0.to_complex()))
}

/// Σ_{n≥0} Γ(u + 2ivn/π) zⁿ, convergent for |z| < e^{|v|}.
pub fn eval_power_series(params: &Parameters, z: Complex64, tol: f64) -> Result<SeriesEval> {
    check_tol(tol)?;
    validate_params_nonnegative(params).into_result()?;
    let g0 = center_value(gamma_coef(*params, EvalOptions::default())(0)?);
    if z == Complex64::new(0.0, 0.0) {
        return Ok(SeriesEval {
            value: g0.to_complex(),
            n_neg: 0,
            n_pos: 0,
            tail_bound: 0.0,
            method: Method::Power,
        });
    }
    let zp = AnnulusPoint::new(z)?;
    let av = params.v.abs();
    if zp.log_abs >= av {
        return Err(Error::outside(format!("|z| must be below e^|v| = {}", av.exp())));
    }
    let side = make_side(
        gamma_coef(*params, EvalOptions::default()),
        SideSpec { dir: 1, sigma: params.u.re - 0.5, log_rho: zp.log_abs - av },
        &zp,
        false,
        stirling_onset(params),
    );
    let (value, np, _, tail_bound) = run_sides::<_, fn(i64) -> Result<LnCoef>>(g0, side, None, budget(tol, g0.to_complex()))?;
    Ok(SeriesEval {
        value,
        n_neg: 0,
        n_pos: np as i64,
        tail_bound,
        method: Method::Power,
    })
}

fn reciprocal_coef(params: Parameters) -> impl Fn(i64) -> Result<LnCoef> {
    move |n| match coefficient_log_gamma_dd(&params, n) {
        Ok((lm, arg)) => Ok(Some((-lm, -arg))),
        Err(Error::GammaPole { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Σ_{n≥0} zⁿ / Γ(u + 2ivn/π), convergent for |z| < e^{-|v|}. No lattice
/// condition: 1/Γ is entire, and coefficients at poles are zero.
pub fn eval_reciprocal_series(params: &Parameters, z: Complex64, tol: f64) -> Result<SeriesEval> {
    check_tol(tol)?;
    let coef = reciprocal_coef(*params);
    let c0 = center_value(coef(0)?);
    if z == Complex64::new(0.0, 0.0) {
        return Ok(SeriesEval {
            value: c0.to_complex(),
            n_neg: 0,
            n_pos: 0,
            tail_bound: 0.0,
            method: Method::Reciprocal,
        });
    }
    let zp = AnnulusPoint::new(z)?;
    let av = params.v.abs();
    if zp.log_abs >= -av {
        return Err(Error::outside(format!("|z| must be below e^-|v| = {}", (-av).exp())));
    }
    let side = make_side(
        coef,
        SideSpec { dir: 1, sigma: 0.5 - params.u.re, log_rho: zp.log_abs + av },
        &zp,
        false,
        stirling_onset(params),
    );
    let (value, np, _, tail_bound) = run_sides::<_, fn(i64) -> Result<LnCoef>>(c0, side, None, budget(tol, c0.to_complex()))?;
    Ok(SeriesEval {
        value,
        n_neg: 0,
        n_pos: np as i64,
        tail_bound,
        method: Method::Reciprocal,
    })
}

/// Relative residual of 2πi/Γ(w) = (e^{iπw} - e^{-iπw}) Γ(1 - w) at
/// w = u + 2ivn/π, both sides formed in log form.
pub fn reflection_transfer(params: &Parameters, n: i64) -> Result<f64> {
    let w = params.coefficient_argument(n);
    let (gr, gi) = log_gamma_dd(w)?;
    let (hr, hi) = log_gamma_dd(Complex64::new(1.0 - w.re, -w.im))?;
    // ln(2πi) - ln Γ(w)
    let lhs_re = Dd::TWO_PI.ln() - gr;
    let lhs_im = Dd::HALF_PI - gi;
    let (er, ei) = ln_exp_difference(w);
    let d_re = (er + hr - lhs_re).to_f64();
    let d_im = (ei + hi - lhs_im).rem_two_pi();
    Ok((Complex64::new(d_re, d_im).exp() - 1.0).norm())
}

/// ln(e^{iπw} - e^{-iπw}), imaginary part unreduced.
fn ln_exp_difference(w: Complex64) -> (Dd, Dd) {
    let (x, y) = (w.re, w.im);
    let xf = x - x.round();
    // a = iπw = -πy + iπx
    let a_re = -Dd::PI.mul_f64(y);
    let a_im = Dd::PI.mul_f64(x);
    if y <= 0.0 {
        // e^a (1 - e^{-2a}),  e^{-2a} = e^{2πy} e^{-2πix}
        let e = Complex64::from_polar((2.0 * PI * y).exp(), -2.0 * PI * xf);
        let l = (Complex64::new(1.0, 0.0) - e).ln();
        (a_re.add_f64(l.re), a_im.add_f64(l.im))
    } else {
        // -e^{-a} (1 - e^{2a}),  e^{2a} = e^{-2πy} e^{2πix}
        let e = Complex64::from_polar((-2.0 * PI * y).exp(), 2.0 * PI * xf);
        let l = (Complex64::new(1.0, 0.0) - e).ln();
        ((-a_re).add_f64(l.re), (Dd::PI - a_im).add_f64(l.im))
    }
}

/// Relative residual of Ψ(u+1, v, z) = ((2vi/π) z∂_z + u) Ψ(u, v, z), with
/// z∂_z Ψ = Σ n Γ(u + 2ivn/π) zⁿ summed term by term.
pub fn contiguity_residual(params: &Parameters, z: &AnnulusPoint, tol: f64) -> Result<f64> {
    contiguity_residual_with(params, z, tol, EvalOptions::default())
}

/// As [`contiguity_residual`]; `opts` is applied to the left-hand side only.
pub fn contiguity_residual_with(params: &Parameters, z: &AnnulusPoint, tol: f64, opts: EvalOptions) -> Result<f64> {
    let shifted = params.with_u(params.u + 1.0);
    let lhs = eval_laurent_with(&shifted, z, tol, opts)?.value;
    let psi = eval_laurent(params, z, tol)?.value;
    let (deriv, ..) = laurent_series(params, z, tol, EvalOptions::default(), true)?;
    let rhs = Complex64::new(0.0, params.step()) * deriv + params.u * psi;
    Ok((lhs - rhs).norm() / lhs.norm())
}

/// Relative residual of Ψ(u, v, 1/z) = Ψ(u, -v, z).
pub fn inversion_residual(params: &Parameters, z: &AnnulusPoint, tol: f64) -> Result<f64> {
    let a = eval_laurent(params, &z.inverse(), tol)?.value;
    let b = eval_laurent(&params.with_v(-params.v), z, tol)?.value;
    Ok((a - b).norm() / b.norm())
}
