//! Double-double arithmetic for the handful of places where a plain `f64`
//! loses the phase of Γ on far-out vertical lines.
//!
//! Only what the Stirling kernel needs: +, -, ×, ÷, exp, ln, sqrt, atan2 and
//! reduction modulo 2π. Values carry roughly 32 significant digits.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: 3.141592653589793,
        lo: 1.2246467991473532e-16,
    };
    pub const TWO_PI: Dd = Dd {
        hi: 6.283185307179586,
        lo: 2.4492935982947064e-16,
    };
    pub const HALF_PI: Dd = Dd {
        hi: 1.5707963267948966,
        lo: 6.123233995736766e-17,
    };
    pub const LN_2: Dd = Dd {
        hi: 0.6931471805599453,
        lo: 2.3190468138462996e-17,
    };
    /// ½ ln 2π
    pub const HALF_LN_2PI: Dd = Dd {
        hi: 0.9189385332046728,
        lo: -3.8782941580672414e-17,
    };
    pub const LN_PI: Dd = Dd {
        hi: 1.1447298858494002,
        lo: 1.0265951162707826e-17,
    };

    #[inline]
    pub fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two doubles.
    #[inline]
    pub fn sum(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Dd {
        let (s, e) = two_sum(self.hi, b);
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn ldexp(self, k: i32) -> Dd {
        let f = 2f64.powi(k);
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    pub fn sqr(self) -> Dd {
        self * self
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let x = self.hi.sqrt();
        let r = self - Dd::prod(x, x);
        Dd::new(x) + Dd::new(r.hi / (2.0 * x))
    }

    pub fn exp(self) -> Dd {
        if self.hi > 709.0 {
            return Dd::new(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / Dd::LN_2.hi).round();
        let r = (self - Dd::LN_2.mul_f64(k)).ldexp(-10);
        // expm1(r) by Taylor series, |r| < 7e-4
        let mut s = r;
        let mut term = r;
        let mut i = 2.0;
        loop {
            term = (term * r) / Dd::new(i);
            s = s + term;
            if term.hi.abs() < 1e-35 * s.hi.abs().max(1e-300) {
                break;
            }
            i += 1.0;
            if i > 30.0 {
                break;
            }
        }
        for _ in 0..10 {
            s = s.mul_f64(2.0) + s.sqr();
        }
        (s + Dd::ONE).ldexp(k as i32)
    }

    pub fn ln(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::new(f64::NAN);
        }
        let x = Dd::new(self.hi.ln());
        x + self * (-x).exp() - Dd::ONE
    }

    /// atan(s) for |s| <= 1.
    fn atan_small(s: Dd) -> Dd {
        // two halvings: atan(s) = 2 atan(s / (1 + sqrt(1 + s²)))
        let mut s = s;
        for _ in 0..2 {
            s = s / (Dd::ONE + (Dd::ONE + s.sqr()).sqrt());
        }
        let s2 = s.sqr();
        let mut sum = s;
        let mut pow = s;
        let mut k = 1.0;
        loop {
            pow = -(pow * s2);
            let term = pow / Dd::new(2.0 * k + 1.0);
            sum = sum + term;
            if term.hi.abs() < 1e-34 * sum.hi.abs().max(1e-300) || k > 40.0 {
                break;
            }
            k += 1.0;
        }
        sum.ldexp(2)
    }

    /// Argument of `x + iy` in (-π, π].
    pub fn atan2(y: Dd, x: Dd) -> Dd {
        if x.hi == 0.0 && y.hi == 0.0 {
            return Dd::ZERO;
        }
        if x.hi.abs() >= y.hi.abs() {
            let a = Dd::atan_small(y / x);
            if x.hi > 0.0 {
                a
            } else if y.hi >= 0.0 {
                a + Dd::PI
            } else {
                a - Dd::PI
            }
        } else {
            let a = Dd::atan_small(x / y);
            if y.hi > 0.0 {
                Dd::HALF_PI - a
            } else {
                -Dd::HALF_PI - a
            }
        }
    }

    /// Reduce modulo 2π into [-π, π], keeping both words.
    pub fn reduce_two_pi(self) -> Dd {
        let k = (self.hi / Dd::TWO_PI.hi).round();
        self - Dd::TWO_PI.mul_f64(k)
    }

    /// (sin x, cos x).
    pub fn sin_cos(self) -> (Dd, Dd) {
        let x = self.reduce_two_pi();
        let q = (x.hi / Dd::HALF_PI.hi).round();
        let r = x - Dd::HALF_PI.mul_f64(q);
        // Taylor series on |r| <= π/4 + tiny
        let r2 = r.sqr();
        let (mut s, mut c) = (r, Dd::ONE);
        let (mut ts, mut tc) = (r, Dd::ONE);
        let mut k = 1.0;
        loop {
            ts = -(ts * r2) / Dd::new((2.0 * k) * (2.0 * k + 1.0));
            tc = -(tc * r2) / Dd::new((2.0 * k - 1.0) * (2.0 * k));
            s = s + ts;
            c = c + tc;
            if (ts.hi.abs() < 1e-34 && tc.hi.abs() < 1e-34) || k > 30.0 {
                break;
            }
            k += 1.0;
        }
        match (q as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    /// Reduce modulo 2π into (-π, π] and round to a double.
    pub fn rem_two_pi(self) -> f64 {
        let k = (self.hi / Dd::TWO_PI.hi).round();
        let mut r = (self - Dd::TWO_PI.mul_f64(k)).to_f64();
        if r > std::f64::consts::PI {
            r -= 2.0 * std::f64::consts::PI;
        } else if r <= -std::f64::consts::PI {
            r += 2.0 * std::f64::consts::PI;
        }
        r
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let e = e + t;
        let (s, e) = quick_two_sum(s, e);
        let e = e + f;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }
}

/// Complex number with double-double parts.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub fn new(re: Dd, im: Dd) -> Self {
        DdComplex { re, im }
    }

    /// e^{lm + i ang}
    pub fn from_ln(lm: Dd, ang: Dd) -> Self {
        let m = lm.exp();
        let (s, c) = ang.sin_cos();
        DdComplex { re: m * c, im: m * s }
    }

    pub fn exp(self) -> Self {
        Self::from_ln(self.re, self.im)
    }

    pub fn mul_dd(self, k: Dd) -> Self {
        DdComplex::new(self.re * k, self.im * k)
    }

    pub fn norm_sqr(self) -> Dd {
        self.re.sqr() + self.im.sqr()
    }

    pub fn to_complex(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for DdComplex {
    type Output = DdComplex;
    fn add(self, b: DdComplex) -> DdComplex {
        DdComplex::new(self.re + b.re, self.im + b.im)
    }
}

impl Sub for DdComplex {
    type Output = DdComplex;
    fn sub(self, b: DdComplex) -> DdComplex {
        DdComplex::new(self.re - b.re, self.im - b.im)
    }
}

impl Mul for DdComplex {
    type Output = DdComplex;
    fn mul(self, b: DdComplex) -> DdComplex {
        DdComplex::new(self.re * b.re - self.im * b.im, self.re * b.im + self.im * b.re)
    }
}

impl Div for DdComplex {
    type Output = DdComplex;
    fn div(self, b: DdComplex) -> DdComplex {
        let d = b.norm_sqr();
        DdComplex::new(
            (self.re * b.re + self.im * b.im) / d,
            (self.im * b.re - self.re * b.im) / d,
        )
    }
}
