//! Angles measured in turns, with an exact rational tag when one is known.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::{sign, Point};
use crate::real::Real;

/// Default tolerance for deciding equality of constructed angles, in turns.
pub const DEFAULT_ANGLE_TOL: f64 = 1e-9;

pub type Turns = Ratio<i64>;

/// An angle normalized to `[0, 1)` turns.
///
/// `exact` is present when the angle is known to be a rational number of
/// turns; comparisons between two tagged angles never consult `turns`.
#[derive(Clone, Copy, Debug)]
pub struct Angle {
    turns: Real,
    exact: Option<Turns>,
}

fn wrap_exact(r: Turns) -> Turns {
    r - Turns::from_integer(r.floor().to_integer())
}

fn wrap_real(t: Real) -> Real {
    let w = t - t.floor();
    if w >= Real::ONE {
        Real::ZERO
    } else {
        w
    }
}

#[allow(clippy::should_implement_trait)]
impl Angle {
    pub fn zero() -> Angle {
        Angle::from_exact(Turns::zero())
    }

    pub fn from_exact(r: Turns) -> Angle {
        let r = wrap_exact(r);
        Angle {
            turns: Real::from_small_ratio(&r),
            exact: Some(r),
        }
    }

    /// `n/d` turns.
    pub fn turns_ratio(n: i64, d: i64) -> Angle {
        Angle::from_exact(Turns::new(n, d))
    }

    pub fn from_real(t: Real) -> Angle {
        Angle {
            turns: wrap_real(t),
            exact: None,
        }
    }

    pub fn from_f64(t: f64) -> Angle {
        Angle::from_real(Real::from_f64(t))
    }

    pub fn value(&self) -> Real {
        self.turns
    }

    pub fn exact(&self) -> Option<Turns> {
        self.exact
    }

    pub fn without_tag(self) -> Angle {
        Angle {
            turns: self.turns,
            exact: None,
        }
    }

    pub fn radians(&self) -> Real {
        self.turns * Real::TAU
    }

    /// `(cos, sin)` of the angle; quarter turns are returned exactly.
    pub fn unit_vector(&self) -> [Real; 2] {
        if let Some(r) = self.exact {
            let q = r * Turns::from_integer(4);
            if q.is_integer() {
                return match q.to_integer() {
                    0 => [Real::ONE, Real::ZERO],
                    1 => [Real::ZERO, Real::ONE],
                    2 => [-Real::ONE, Real::ZERO],
                    _ => [Real::ZERO, -Real::ONE],
                };
            }
        }
        let (s, c) = self.radians().sin_cos();
        [c, s]
    }

    fn combine(
        self,
        other: Angle,
        real: impl Fn(Real, Real) -> Real,
        exact: impl Fn(&Turns, &Turns) -> Option<Turns>,
    ) -> Angle {
        let tag = match (self.exact, other.exact) {
            (Some(a), Some(b)) => exact(&a, &b),
            _ => None,
        };
        match tag {
            Some(r) => Angle::from_exact(r),
            None => Angle::from_real(real(self.turns, other.turns)),
        }
    }

    pub fn add(self, other: Angle) -> Angle {
        self.combine(other, |a, b| a + b, |a, b| a.checked_add(b))
    }

    pub fn sub(self, other: Angle) -> Angle {
        self.combine(other, |a, b| a - b, |a, b| a.checked_sub(b))
    }

    pub fn neg(self) -> Angle {
        Angle::zero().sub(self)
    }

    /// Half of the angle, read as a number in `[0, 1)` (no wraparound).
    pub fn half(self) -> Angle {
        match self.exact {
            Some(r) => match r.checked_mul(&Turns::new(1, 2)) {
                Some(h) => Angle::from_exact(h),
                None => Angle::from_real(self.turns.half()),
            },
            None => Angle::from_real(self.turns.half()),
        }
    }

    /// Multiplies by a small integer, wrapping into `[0, 1)`.
    pub fn times(self, k: i64) -> Angle {
        match self.exact.and_then(|r| r.checked_mul(&Turns::from_integer(k))) {
            Some(r) => Angle::from_exact(r),
            None => Angle::from_real(self.turns * Real::from_i64(k)),
        }
    }

    /// Equality on the circle: the angles differ by less than `tol` turns,
    /// modulo one turn.
    pub fn eq_tol(&self, other: &Angle, tol: f64) -> bool {
        if let (Some(a), Some(b)) = (self.exact, other.exact) {
            return a == b;
        }
        let d = wrap_real(self.turns - other.turns).to_f64();
        d <= tol || d >= 1.0 - tol
    }

    /// Linear comparison of the normalized values; values within `tol` are equal.
    pub fn cmp_tol(&self, other: &Angle, tol: f64) -> Ordering {
        if let (Some(a), Some(b)) = (self.exact, other.exact) {
            return a.cmp(&b);
        }
        let d = (self.turns - other.turns).to_f64();
        if d.abs() <= tol {
            Ordering::Equal
        } else if d < 0.0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Total order on representatives, for sorting.
    pub fn total_cmp(&self, other: &Angle) -> Ordering {
        if let (Some(a), Some(b)) = (self.exact, other.exact) {
            return a.cmp(&b);
        }
        self.turns
            .partial_cmp(&other.turns)
            .unwrap_or(Ordering::Equal)
    }

    /// Renders an exact angle as `p/q` turns, otherwise a decimal.
    pub fn describe(&self, digits: usize) -> String {
        match self.exact {
            Some(r) if r.is_zero() => "0".to_string(),
            Some(r) if *r.denom() == 1 => r.numer().to_string(),
            Some(r) => format!("{}/{}", r.numer(), r.denom()),
            None => self.turns.to_decimal(digits),
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe(f.precision().unwrap_or(12)))
    }
}

/// Direction of a nonzero rational vector, in turns counterclockwise from +x.
///
/// Axis-aligned and diagonal directions carry exact tags; those are the only
/// rational directions whose angle is a rational number of turns.
pub fn direction_angle(d: &Point) -> Result<Angle> {
    if d.is_zero() {
        return Err(Error::DegenerateRay);
    }
    let sx = sign(&d.x);
    let sy = sign(&d.y);
    let tag = if sy == 0 {
        Some(if sx > 0 { (0, 1) } else { (1, 2) })
    } else if sx == 0 {
        Some(if sy > 0 { (1, 4) } else { (3, 4) })
    } else if d.x.abs() == d.y.abs() {
        Some(match (sx > 0, sy > 0) {
            (true, true) => (1, 8),
            (false, true) => (3, 8),
            (false, false) => (5, 8),
            (true, false) => (7, 8),
        })
    } else {
        None
    };
    if let Some((n, den)) = tag {
        return Ok(Angle::turns_ratio(n, den));
    }
    let [x, y] = d.to_real();
    let rad = Real::atan2(y, x);
    Ok(Angle::from_real(rad / Real::TAU))
}

/// Angular coordinate of `v` about `origin`.
pub fn angle_of(origin: &Point, v: &Point) -> Result<Angle> {
    direction_angle(&(v - origin))
}

/// Exact comparison of the angles of two nonzero rational vectors.
pub fn cmp_direction(u: &Point, v: &Point) -> Ordering {
    fn half(p: &Point) -> u8 {
        let sy = sign(&p.y);
        if sy > 0 || (sy == 0 && sign(&p.x) > 0) {
            0
        } else {
            1
        }
    }
    half(u)
        .cmp(&half(v))
        .then_with(|| 0.cmp(&sign(&u.cross(v))))
}

/// Counterclockwise arc length from `a` to `b`, `(b - a) mod 1`.
pub fn ccw_arc_length(a: Angle, b: Angle) -> Angle {
    b.sub(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcMode {
    /// The arc traversed counterclockwise from the first endpoint.
    CcwFromA,
    /// The shorter of the two arcs; antipodal endpoints are an error.
    Smallest,
}

pub fn arc_midpoint(a: Angle, b: Angle, mode: ArcMode, tol: f64) -> Result<Angle> {
    let forward = ccw_arc_length(a, b);
    match mode {
        ArcMode::CcwFromA => Ok(a.add(forward.half())),
        ArcMode::Smallest => match forward.cmp_tol(&Angle::turns_ratio(1, 2), tol) {
            Ordering::Equal => Err(Error::Antipodal),
            Ordering::Less => Ok(a.add(forward.half())),
            Ordering::Greater => Ok(b.add(ccw_arc_length(b, a).half())),
        },
    }
}

/// Reduced exact value `n/d` as a pair, for test assertions.
pub fn exact_pair(a: &Angle) -> Option<(i64, i64)> {
    a.exact().map(|r| {
        let g = r.numer().gcd(r.denom());
        (r.numer() / g, r.denom() / g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratio;

    const TOL: f64 = DEFAULT_ANGLE_TOL;

    fn t(n: i64, d: i64) -> Angle {
        Angle::turns_ratio(n, d)
    }

    #[test]
    fn angle_of_examples() {
        let a = angle_of(&Point::from_ints(0, 0), &Point::from_ints(0, 5)).unwrap();
        assert_eq!(exact_pair(&a), Some((1, 4)));
        let a = angle_of(&Point::from_ints(1, 1), &Point::from_ints(2, 1)).unwrap();
        assert_eq!(exact_pair(&a), Some((0, 1)));
        let a = angle_of(&Point::from_ints(0, 0), &Point::from_ints(-1, -1)).unwrap();
        assert_eq!(exact_pair(&a), Some((5, 8)));
        assert_eq!(
            angle_of(&Point::from_ints(3, 3), &Point::from_ints(3, 3)).unwrap_err(),
            Error::DegenerateRay
        );
    }

    #[test]
    fn generic_direction_value() {
        let a = direction_angle(&Point::from_ints(3, 4)).unwrap();
        assert!(a.exact().is_none());
        let expect = (4.0f64).atan2(3.0) / std::f64::consts::TAU;
        assert!((a.value().to_f64() - expect).abs() < 1e-15);
        let b = direction_angle(&Point::new(ratio(-3, 7), ratio(-4, 7))).unwrap();
        assert!((b.value().to_f64() - (expect + 0.5)).abs() < 1e-15);
    }

    #[test]
    fn ccw_arc_examples() {
        assert_eq!(exact_pair(&ccw_arc_length(t(0, 1), t(1, 4))), Some((1, 4)));
        assert_eq!(exact_pair(&ccw_arc_length(t(3, 4), t(1, 4))), Some((1, 2)));
        let x = Angle::from_f64(0.377);
        assert!(ccw_arc_length(x, x).eq_tol(&Angle::zero(), TOL));
    }

    #[test]
    fn arc_midpoint_examples() {
        let m = arc_midpoint(t(0, 1), t(1, 4), ArcMode::Smallest, TOL).unwrap();
        assert_eq!(exact_pair(&m), Some((1, 8)));
        // forward arc 5/8 -> 1/24 is 5/12, the short way crosses zero
        let m = arc_midpoint(t(5, 8), t(1, 24), ArcMode::Smallest, TOL).unwrap();
        assert_eq!(exact_pair(&m), Some((5, 6)));
        let m = arc_midpoint(Angle::zero(), Angle::from_f64(0.1), ArcMode::CcwFromA, TOL).unwrap();
        assert!(m.eq_tol(&Angle::from_f64(0.05), 1e-15));
        assert_eq!(
            arc_midpoint(t(1, 8), t(5, 8), ArcMode::Smallest, TOL).unwrap_err(),
            Error::Antipodal
        );
        // ccw mode over a long arc
        let m = arc_midpoint(t(1, 4), t(0, 1), ArcMode::CcwFromA, TOL).unwrap();
        assert_eq!(exact_pair(&m), Some((5, 8)));
    }

    #[test]
    fn exact_direction_order_matches_quadrants() {
        let dirs = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];
        for w in dirs.windows(2) {
            let u = Point::from_ints(w[0].0, w[0].1);
            let v = Point::from_ints(w[1].0, w[1].1);
            assert_eq!(cmp_direction(&u, &v), Ordering::Less);
            assert_eq!(cmp_direction(&v, &u), Ordering::Greater);
        }
    }

    #[test]
    fn unit_vector_of_quarter_is_exact() {
        let [c, s] = t(3, 4).unit_vector();
        assert_eq!(c.to_f64(), 0.0);
        assert_eq!(s.to_f64(), -1.0);
    }
}
