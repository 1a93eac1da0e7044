use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// A complex number `w` held as `(ln|w|, arg w)`.
///
/// Coefficients Γ(u + 2ivn/π) decay like e^{-|v n|} and leave the range of
/// `f64` long before the series stops contributing, so they are carried in
/// this form. `log_modulus = -∞` is the zero value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogComplex {
    pub log_modulus: f64,
    pub argument: f64,
}

/// Reduce an angle into (-π, π].
pub fn principal_angle(a: f64) -> f64 {
    if !a.is_finite() {
        return a;
    }
    let mut r = a % (2.0 * PI);
    if r > PI {
        r -= 2.0 * PI;
    } else if r <= -PI {
        r += 2.0 * PI;
    }
    r
}

/// Distance between two angles on the circle, in [0, π].
pub fn circle_distance(a: f64, b: f64) -> f64 {
    principal_angle(a - b).abs()
}

impl LogComplex {
    pub const ZERO: LogComplex = LogComplex {
        log_modulus: f64::NEG_INFINITY,
        argument: 0.0,
    };
    pub const ONE: LogComplex = LogComplex {
        log_modulus: 0.0,
        argument: 0.0,
    };

    pub fn new(log_modulus: f64, argument: f64) -> Self {
        LogComplex {
            log_modulus,
            argument: principal_angle(argument),
        }
    }

    pub fn from_complex(w: Complex64) -> Self {
        if w.re == 0.0 && w.im == 0.0 {
            return LogComplex::ZERO;
        }
        let mut arg = w.im.atan2(w.re);
        if arg == -PI {
            arg = PI;
        }
        LogComplex {
            log_modulus: w.norm().ln(),
            argument: arg,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar(self.log_modulus.exp(), self.argument)
    }

    pub fn is_zero(&self) -> bool {
        self.log_modulus == f64::NEG_INFINITY
    }

    /// The complex logarithm `ln|w| + i arg w` (principal).
    pub fn ln(self) -> Complex64 {
        Complex64::new(self.log_modulus, self.argument)
    }

    pub fn recip(self) -> Self {
        if self.is_zero() {
            return LogComplex {
                log_modulus: f64::INFINITY,
                argument: 0.0,
            };
        }
        LogComplex::new(-self.log_modulus, -self.argument)
    }

    pub fn mul(self, other: LogComplex) -> Self {
        if self.is_zero() || other.is_zero() {
            return LogComplex::ZERO;
        }
        LogComplex::new(
            self.log_modulus + other.log_modulus,
            self.argument + other.argument,
        )
    }

    pub fn conj(self) -> Self {
        if self.argument == PI {
            return self;
        }
        LogComplex {
            log_modulus: self.log_modulus,
            argument: -self.argument,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_state() {
        let z = LogComplex::from_complex(Complex64::new(0.0, 0.0));
        assert!(z.is_zero());
        assert_eq!(z.to_complex(), Complex64::new(0.0, 0.0));
        assert!(LogComplex::ONE.mul(LogComplex::ZERO).is_zero());
    }

    #[test]
    fn negative_real_axis_has_argument_pi() {
        let w = LogComplex::from_complex(Complex64::new(-2.0, -0.0));
        assert_eq!(w.argument, PI);
    }

    #[test]
    fn circle_distance_wraps() {
        assert!((circle_distance(3.1, -3.1) - (2.0 * PI - 6.2)).abs() < 1e-12);
        assert_eq!(circle_distance(1.0, 1.0), 0.0);
    }

    proptest! {
        #[test]
        fn round_trip(lm in -700.0f64..700.0, arg in -3.14f64..3.14) {
            let w = LogComplex::new(lm, arg);
            let back = LogComplex::from_complex(w.to_complex());
            prop_assert!((back.log_modulus - lm).abs() <= 4.0 * f64::EPSILON * lm.abs().max(1.0));
            prop_assert!(circle_distance(back.argument, arg) <= 4.0 * f64::EPSILON);
        }
    }
}
