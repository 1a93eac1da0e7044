//! Ψ(u, v, z) as a contour integral over two rays out of the origin,
//!
//! Ψ(u, v, z) = ∫_{L₊ - L₋} e^{-t} t^u / (1 - z t^{2iv/π}) dt/t,
//!
//! with L± = {s e^{±iε} : s > 0} and principal powers. The pole spiral of the
//! integrand sits strictly between the rays when π|ln|z||/(2v) < ε < π/2.
//!
//! With s = eˣ both rays become one integral over x ∈ ℝ of
//! F(x) = G(x + iε) - G(x - iε), G(w) = exp(-eʷ + u w) / (1 - z e^{2ivw/π}),
//! and |F(x)| ≤ K e^{x Re u} e^{-eˣ cos ε}, which certifies both truncations.

use crate::dd::{Dd, DdComplex};
use crate::error::{Error, Result};
use crate::gamma::{log_gamma, Parameters};
use crate::laurent::{AnnulusPoint, Method, SeriesEval};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::{FRAC_PI_2, PI};

pub const DEFAULT_NODE_BUDGET: usize = 2_000_000;

/// Nodes and weights to 32 digits, so the rule itself adds no rounding floor.
const GK15_NODES: [Dd; 8] = [
    Dd { hi: 0.9914553711208126, lo: 2.7322067495382985e-17 },
    Dd { hi: 0.9491079123427585, lo: 3.82579658786657e-17 },
    Dd { hi: 0.8648644233597691, lo: -2.3887783447584197e-17 },
    Dd { hi: 0.7415311855993945, lo: -2.0220134774069897e-17 },
    Dd { hi: 0.5860872354676911, lo: -1.7466970798550533e-17 },
    Dd { hi: 0.4058451513773972, lo: -1.72492754475471e-17 },
    Dd { hi: 0.20778495500789848, lo: -1.322698778629045e-17 },
    Dd { hi: 0.0, lo: 0.0 },
];
const K15_WEIGHTS: [Dd; 8] = [
    Dd { hi: 0.022935322010529224, lo: 5.957180517223162e-19 },
    Dd { hi: 0.06309209262997856, lo: -4.536585404360517e-18 },
    Dd { hi: 0.10479001032225019, lo: -3.90658597958814e-18 },
    Dd { hi: 0.14065325971552592, lo: -2.48416478796896e-19 },
    Dd { hi: 0.1690047266392679, lo: -7.56643290985809e-18 },
    Dd { hi: 0.19035057806478542, lo: -9.616513280901214e-18 },
    Dd { hi: 0.20443294007529889, lo: 6.740401802865973e-18 },
    Dd { hi: 0.20948214108472782, lo: 9.321252782204223e-18 },
];
// weights of the embedded 7-point Gauss rule, at the odd Kronrod nodes
const G7_WEIGHTS: [Dd; 4] = [
    Dd { hi: 0.1294849661688697, lo: -9.625448970284404e-18 },
    Dd { hi: 0.27970539148927664, lo: 2.3267180221717138e-17 },
    Dd { hi: 0.3818300505051189, lo: 2.1862747923824822e-17 },
    Dd { hi: 0.4179591836734694, lo: -1.5497807119257288e-17 },
];

/// The two rays and the window [x_lo, x_hi] of log-radius that is integrated.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayContour {
    pub epsilon: f64,
    pub s_min: f64,
    pub s_max: f64,
    pub node_budget: usize,
    /// Bound on what the window leaves out at both ends.
    pub truncation: f64,
}

/// The open interval (π|ln|z||/(2|v|), π/2) of admissible ray angles.
pub fn admissible_epsilon(params: &Parameters, z: &AnnulusPoint) -> Result<(f64, f64)> {
    let lo = PI * z.log_abs().abs() / (2.0 * params.v.abs());
    if !(lo < FRAC_PI_2) {
        return Err(Error::outside(format!(
            "no admissible ray angle: π|ln|z||/2|v| = {lo} is not below π/2"
        )));
    }
    Ok((lo, FRAC_PI_2))
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("tol must be a positive number"))
    }
}

/// Moves v < 0 to v > 0 through Ψ(u, v, z) = Ψ(u, -v, 1/z).
fn normalize(params: &Parameters, z: &AnnulusPoint) -> (Parameters, AnnulusPoint) {
    if params.v < 0.0 {
        (params.with_v(-params.v), z.inverse())
    } else {
        (*params, *z)
    }
}

/// Prefactor K of the envelope |F(x)| ≤ K e^{x Re u} e^{-eˣ cos ε}.
fn envelope(params: &Parameters, z: &AnnulusPoint, eps: f64) -> f64 {
    let shift = 2.0 * params.v * eps / PI;
    let rho_plus = (z.log_abs() - shift).exp();
    let rho_minus = (z.log_abs() + shift).exp();
    let im = params.u.im;
    (-eps * im).exp() / (1.0 - rho_plus) + (eps * im).exp() / (rho_minus - 1.0)
}

/// ∫_S^∞ s^{a-1} e^{-cs} ds, bounded for S large enough that the bound is
/// decreasing.
fn upper_tail(a: f64, c: f64, s: f64) -> f64 {
    let d = c - (a - 1.0).max(0.0) / s;
    if d <= 0.0 {
        return f64::INFINITY;
    }
    ((a - 1.0) * s.ln() - c * s).exp() / d
}

impl RayContour {
    /// Contour at angle `epsilon`, with the window sized so each omitted end
    /// is below `tol / 10`.
    pub fn new(params: &Parameters, z: &AnnulusPoint, epsilon: f64, tol: f64) -> Result<Self> {
        check_tol(tol)?;
        let (params, z) = normalize(params, z);
        let (lo, hi) = admissible_epsilon(&params, &z)?;
        if !(epsilon > lo && epsilon < hi) {
            return Err(Error::outside(format!("epsilon = {epsilon} is outside ({lo}, {hi})")));
        }
        let a = params.u.re;
        if !(a > 0.0) {
            return Err(Error::invalid(format!("the contour integral needs Re u > 0, got {a}")));
        }
        let k = envelope(&params, &z, epsilon);
        let c = epsilon.cos();
        let each = tol / 10.0;
        // ∫_{-∞}^{X} K e^{a x} dx = K e^{aX} / a
        let x_lo = ((each * a / k).ln() / a).min(0.0);
        let mut s_max = 1.0f64;
        while k * upper_tail(a, c, s_max) > each {
            s_max *= 1.25;
            if s_max > 1e8 {
                return Err(Error::QuadratureFailure {
                    estimate: k * upper_tail(a, c, s_max),
                    nodes: 0,
                });
            }
        }
        Ok(RayContour {
            epsilon,
            s_min: x_lo.exp(),
            s_max,
            node_budget: DEFAULT_NODE_BUDGET,
            truncation: k * (a * x_lo).exp() / a + k * upper_tail(a, c, s_max),
        })
    }
}

struct Panel {
    err: f64,
    a: f64,
    b: f64,
    value: DdComplex,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err).then(o.a.total_cmp(&self.a))
    }
}

fn gk15<F: Fn(Dd) -> DdComplex>(f: &F, a: f64, b: f64) -> Panel {
    // nodes are placed in double-double: rounding c ± hξ to a double moves
    // each sample by a different amount and puts a noise floor under the sum
    let c = Dd::sum(a, b).ldexp(-1);
    let h = Dd::sum(b, -a).ldexp(-1);
    let fc = f(c);
    let mut k = fc.mul_dd(K15_WEIGHTS[7]);
    let mut g = fc.mul_dd(G7_WEIGHTS[3]);
    for i in 0..7 {
        let x = GK15_NODES[i] * h;
        let s = f(c - x) + f(c + x);
        k = k + s.mul_dd(K15_WEIGHTS[i]);
        if i % 2 == 1 {
            g = g + s.mul_dd(G7_WEIGHTS[i / 2]);
        }
    }
    Panel {
        err: (k - g).mul_dd(h).to_complex().norm(),
        a,
        b,
        value: k.mul_dd(h),
    }
}

/// Adaptive Gauss-Kronrod (7, 15) over [a, b], starting from `pieces` equal
/// panels and always splitting the worst one. Returns (value, error, nodes).
fn adaptive<F: Fn(Dd) -> DdComplex>(f: &F, a: f64, b: f64, pieces: usize, tol: f64, budget: usize) -> Result<(Complex64, f64, usize)> {
    let mut heap = BinaryHeap::new();
    let w = (b - a) / pieces as f64;
    for i in 0..pieces {
        let lo = a + i as f64 * w;
        let hi = if i + 1 == pieces { b } else { a + (i + 1) as f64 * w };
        heap.push(gk15(f, lo, hi));
    }
    let mut nodes = 15 * pieces;
    let mut err: f64 = heap.iter().map(|p| p.err).sum();
    loop {
        if err <= tol {
            // re-add from scratch before trusting the running total
            err = heap.iter().map(|p| p.err).sum();
        }
        if err <= tol {
            // sum in a fixed order so results do not depend on heap layout
            let mut panels: Vec<Panel> = heap.into_vec();
            panels.sort_by(|p, q| p.a.total_cmp(&q.a));
            let value = panels.iter().fold(DdComplex::default(), |acc, p| acc + p.value);
            return Ok((value.to_complex(), err, nodes));
        }
        if nodes + 30 > budget {
            return Err(Error::QuadratureFailure { estimate: err, nodes });
        }
        let worst = heap.pop().expect("nonempty heap");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            return Err(Error::QuadratureFailure { estimate: err, nodes });
        }
        let (l, r) = (gk15(f, worst.a, mid), gk15(f, mid, worst.b));
        err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        nodes += 30;
    }
}

/// F(x) = G(x + iε) - G(x - iε) in double-double. Ψ can be many orders of
/// magnitude below ∫|F|, so the integrand is carried past double precision.
fn integrand(params: &Parameters, z: &AnnulusPoint, eps: f64) -> impl Fn(Dd) -> DdComplex {
    let u = params.u;
    let step = Dd::new(2.0 * params.v) / Dd::PI;
    let (log_r, arg) = (z.log_abs(), z.arg());
    let (sin_e, cos_e) = Dd::new(eps).sin_cos();
    let one = DdComplex::new(Dd::ONE, Dd::ZERO);
    move |x: Dd| {
        let ex = x.exp();
        let side = |sign: f64| {
            // u w - e^w with w = x + i sign ε
            let re = x.mul_f64(u.re) - Dd::prod(u.im, sign * eps) - ex * cos_e;
            let im = x.mul_f64(u.im) + Dd::prod(u.re, sign * eps) - (ex * sin_e).mul_f64(sign);
            let num = DdComplex::new(re, im).exp();
            // z e^{2ivw/π} = exp(ln|z| - sign (2v/π) ε + i (arg z + (2v/π) x))
            let q = DdComplex::new(
                Dd::new(log_r) - step.mul_f64(sign * eps),
                (step * x).add_f64(arg),
            )
            .exp();
            num / (one - q)
        };
        side(1.0) - side(-1.0)
    }
}

/// Ψ(u, v, z) by quadrature along the rays at the midpoint of the admissible
/// angle interval.
pub fn eval_integral(params: &Parameters, z: &AnnulusPoint, tol: f64) -> Result<SeriesEval> {
    check_tol(tol)?;
    let (lo, hi) = {
        let (p, w) = normalize(params, z);
        admissible_epsilon(&p, &w)?
    };
    let contour = RayContour::new(params, z, 0.5 * (lo + hi), tol)?;
    eval_integral_on(params, z, tol, &contour)
}

/// As [`eval_integral`] on a given contour. The total error (quadrature
/// estimate plus window truncation) is kept below tol · min(1, |Γ(u)|).
pub fn eval_integral_on(params: &Parameters, z: &AnnulusPoint, tol: f64, contour: &RayContour) -> Result<SeriesEval> {
    check_tol(tol)?;
    if !z.in_annulus(params.v) {
        return Err(Error::outside(format!(
            "|ln|z|| = {} is not below |v| = {}",
            z.log_abs().abs(),
            params.v.abs()
        )));
    }
    let scale = log_gamma(params.u)?.to_complex().norm().min(1.0);
    let budget = tol * scale;
    let contour = if contour.truncation > budget / 5.0 {
        RayContour {
            node_budget: contour.node_budget,
            ..RayContour::new(params, z, contour.epsilon, budget / 2.0)?
        }
    } else {
        *contour
    };
    let (params, z) = normalize(params, z);
    let f = integrand(&params, &z, contour.epsilon);
    let a = contour.s_min.ln();
    let b = contour.s_max.ln();
    let pieces = ((b - a).ceil() as usize).clamp(1, 512);
    let (value, err, nodes) = adaptive(&f, a, b, pieces, budget - contour.truncation, contour.node_budget)?;
    Ok(SeriesEval {
        value,
        n_neg: 0,
        n_pos: nodes as i64,
        tail_bound: err + contour.truncation,
        method: Method::Integral,
    })
}
