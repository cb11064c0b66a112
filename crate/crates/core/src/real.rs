//! Double-double floating point (about 106 bits of mantissa).
//!
//! Used for constructed quantities that cannot stay rational: angles of
//! rational directions, arc midpoints, radii and the Cartesian embedding of
//! points on a circle.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

/// An unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Real {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
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

impl Real {
    pub const ZERO: Real = Real { hi: 0.0, lo: 0.0 };
    pub const ONE: Real = Real { hi: 1.0, lo: 0.0 };
    pub const PI: Real = Real {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    };
    pub const TAU: Real = Real {
        hi: std::f64::consts::TAU,
        lo: 2.449_293_598_294_706_4e-16,
    };
    const FRAC_PI_2: Real = Real {
        hi: std::f64::consts::FRAC_PI_2,
        lo: 6.123_233_995_736_766e-17,
    };

    pub const fn from_f64(x: f64) -> Real {
        Real { hi: x, lo: 0.0 }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn from_i64(v: i64) -> Real {
        let hi = v as f64;
        // |v - hi| < 2^11 for any i64, so the remainder is exact.
        let lo = (v as i128 - hi as i128) as f64;
        let (hi, lo) = quick_two_sum(hi, lo);
        Real { hi, lo }
    }

    pub fn from_bigint(v: &BigInt) -> Real {
        let hi = v.to_f64().unwrap_or(f64::NAN);
        if !hi.is_finite() {
            return Real::from_f64(hi);
        }
        let rem = v - BigInt::from_f64(hi).unwrap_or_default();
        let lo = rem.to_f64().unwrap_or(0.0);
        let (hi, lo) = quick_two_sum(hi, lo);
        Real { hi, lo }
    }

    pub fn from_ratio(r: &BigRational) -> Real {
        if r.is_zero() {
            return Real::ZERO;
        }
        Real::from_bigint(r.numer()) / Real::from_bigint(r.denom())
    }

    pub fn from_small_ratio(r: &Ratio<i64>) -> Real {
        Real::from_i64(*r.numer()) / Real::from_i64(*r.denom())
    }

    pub fn abs(self) -> Real {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn is_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }

    pub fn floor(self) -> Real {
        let fh = self.hi.floor();
        if fh == self.hi {
            let (hi, lo) = quick_two_sum(fh, self.lo.floor());
            Real { hi, lo }
        } else {
            Real { hi: fh, lo: 0.0 }
        }
    }

    pub fn round(self) -> Real {
        (self + Real::from_f64(0.5)).floor()
    }

    pub fn mul_f64(self, k: f64) -> Real {
        self * Real::from_f64(k)
    }

    pub fn half(self) -> Real {
        Real {
            hi: self.hi * 0.5,
            lo: self.lo * 0.5,
        }
    }

    pub fn sqr(self) -> Real {
        self * self
    }

    pub fn sqrt(self) -> Real {
        if self.hi <= 0.0 {
            return Real::ZERO;
        }
        let s = Real::from_f64(self.hi.sqrt());
        s + (self - s * s) / s.mul_f64(2.0)
    }

    /// Simultaneous sine and cosine of an angle in radians.
    pub fn sin_cos(self) -> (Real, Real) {
        let k = (self / Real::FRAC_PI_2).round();
        let t = self - k * Real::FRAC_PI_2;
        let t2 = t * t;
        // Taylor series on |t| <= pi/4; 30 terms is far past double-double resolution.
        let mut sin = t;
        let mut cos = Real::ONE;
        let mut term_s = t;
        let mut term_c = Real::ONE;
        for i in 1..30 {
            let n = (2 * i) as f64;
            term_c = -(term_c * t2) / Real::from_f64(n * (n - 1.0));
            term_s = -(term_s * t2) / Real::from_f64(n * (n + 1.0));
            cos = cos + term_c;
            sin = sin + term_s;
            if term_s.hi.abs() < 1e-40 && term_c.hi.abs() < 1e-40 {
                break;
            }
        }
        match (k.to_f64() as i64).rem_euclid(4) {
            0 => (sin, cos),
            1 => (cos, -sin),
            2 => (-sin, -cos),
            _ => (-cos, sin),
        }
    }

    /// `atan2(y, x)` in radians, in `(-pi, pi]`.
    pub fn atan2(y: Real, x: Real) -> Real {
        let mut theta = Real::from_f64(y.to_f64().atan2(x.to_f64()));
        // Newton steps on f(t) = y cos t - x sin t.
        for _ in 0..2 {
            let (s, c) = theta.sin_cos();
            let num = y * c - x * s;
            let den = x * c + y * s;
            if den.hi == 0.0 {
                break;
            }
            theta = theta + num / den;
        }
        theta
    }

    /// Fixed-point decimal rendering with `digits` digits after the point.
    pub fn to_decimal(self, digits: usize) -> String {
        if !self.hi.is_finite() {
            return format!("{}", self.hi);
        }
        let neg = self.is_negative();
        let mut v = self.abs();
        // round half up at the last digit
        let mut scale = Real::ONE;
        for _ in 0..digits {
            scale = scale.mul_f64(10.0);
        }
        v = v + Real::from_f64(0.5) / scale;
        let int_part = v.floor();
        let mut frac = v - int_part;
        let mut out = String::new();
        if neg && (int_part.hi != 0.0 || (frac * scale).floor().hi != 0.0) {
            out.push('-');
        }
        out.push_str(&format!("{}", int_part.to_f64() as i128));
        if digits > 0 {
            out.push('.');
            for _ in 0..digits {
                frac = frac.mul_f64(10.0);
                let d = frac.floor();
                let digit = (d.to_f64() as i64).clamp(0, 9);
                out.push(char::from(b'0' + digit as u8));
                frac = frac - d;
            }
        }
        out
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Real {
        Real::from_f64(x)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Real {
    type Output = Real;
    fn add(self, b: Real) -> Real {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let e = e + t;
        let (s, e) = quick_two_sum(s, e);
        let e = e + f;
        let (hi, lo) = quick_two_sum(s, e);
        Real { hi, lo }
    }
}

impl Sub for Real {
    type Output = Real;
    fn sub(self, b: Real) -> Real {
        self + (-b)
    }
}

impl Mul for Real {
    type Output = Real;
    fn mul(self, b: Real) -> Real {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Real { hi, lo }
    }
}

impl Div for Real {
    type Output = Real;
    fn div(self, b: Real) -> Real {
        let q1 = self.hi / b.hi;
        let r = self - b * Real::from_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Real::from_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Real { hi, lo } + Real::from_f64(q3)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => f.write_str(&self.to_decimal(p)),
            None => write!(f, "{}", self.to_f64()),
        }
    }
}

/// Square root of a nonnegative rational in double-double.
pub fn sqrt_ratio(r: &BigRational) -> Real {
    if r.is_negative() {
        return Real::ZERO;
    }
    Real::from_ratio(r).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Real, b: Real, tol: f64) -> bool {
        (a - b).abs().to_f64() <= tol
    }

    #[test]
    fn division_is_double_double_accurate() {
        let third = Real::ONE / Real::from_f64(3.0);
        let r = third * Real::from_f64(3.0) - Real::ONE;
        assert!(r.abs().to_f64() < 1e-31, "{r:?}");
    }

    #[test]
    fn sqrt_two_squares_back() {
        let s = Real::from_f64(2.0).sqrt();
        assert!(close(s * s, Real::from_f64(2.0), 1e-31));
    }

    #[test]
    fn pythagorean_angle_residual() {
        // atan2 must satisfy y cos t - x sin t = 0 far below f64 resolution.
        for (x, y) in [(3.0, 4.0), (-5.0, 12.0), (1.0, 2.0), (-7.0, -24.0), (8.0, -15.0)] {
            let t = Real::atan2(Real::from_f64(y), Real::from_f64(x));
            let (s, c) = t.sin_cos();
            let resid = Real::from_f64(y) * c - Real::from_f64(x) * s;
            assert!(resid.abs().to_f64() < 1e-29, "({x},{y}) resid {resid:?}");
        }
    }

    #[test]
    fn quarter_turns_are_exact_enough() {
        let (s, c) = (Real::PI.half()).sin_cos();
        assert!(close(s, Real::ONE, 1e-31));
        assert!(c.abs().to_f64() < 1e-31);
        let t = Real::atan2(Real::ONE, Real::ONE);
        assert!(close(t * Real::from_f64(4.0), Real::PI, 1e-31));
    }

    #[test]
    fn decimal_rendering() {
        let third = Real::ONE / Real::from_f64(3.0);
        assert_eq!(third.to_decimal(25), "0.3333333333333333333333333");
        assert_eq!(Real::from_f64(-2.5).to_decimal(2), "-2.50");
        assert_eq!(Real::from_f64(-0.0000001).to_decimal(3), "0.000");
        assert_eq!(Real::from_f64(1.9999).to_decimal(2), "2.00");
    }

    #[test]
    fn ratio_conversion() {
        let r = BigRational::new(BigInt::from(1), BigInt::from(7));
        let x = Real::from_ratio(&r) * Real::from_f64(7.0);
        assert!(close(x, Real::ONE, 1e-31));
    }
}
