//! Point values produced by centers: exact when the construction stays
//! rational, double-double otherwise.

use std::fmt;

use crate::geom::{format_scalar, Point, Similarity};
use crate::real::Real;

#[derive(Clone, Debug)]
pub struct CenterValue {
    exact: Option<Point>,
    approx: [Real; 2],
}

impl CenterValue {
    pub fn exact(p: Point) -> CenterValue {
        let approx = p.to_real();
        CenterValue {
            exact: Some(p),
            approx,
        }
    }

    pub fn approx(xy: [Real; 2]) -> CenterValue {
        CenterValue {
            exact: None,
            approx: xy,
        }
    }

    pub fn exact_point(&self) -> Option<&Point> {
        self.exact.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn coords(&self) -> [Real; 2] {
        self.approx
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [self.approx[0].to_f64(), self.approx[1].to_f64()]
    }

    pub fn transform(&self, t: &Similarity) -> CenterValue {
        match &self.exact {
            Some(p) => CenterValue::exact(t.apply(p)),
            None => CenterValue::approx(t.apply_real(&self.approx)),
        }
    }

    pub fn distance(&self, other: &CenterValue) -> Real {
        let dx = self.approx[0] - other.approx[0];
        let dy = self.approx[1] - other.approx[1];
        (dx * dx + dy * dy).sqrt()
    }

    /// Equal exactly when both sides are exact, otherwise within `tol`.
    pub fn same_as(&self, other: &CenterValue, tol: f64) -> bool {
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => a == b,
            _ => self.distance(other).to_f64() <= tol,
        }
    }

    /// Renders exact coordinates as `p/q`, approximate ones with `digits` decimals.
    pub fn render(&self, digits: usize) -> [String; 2] {
        match &self.exact {
            Some(p) => [format_scalar(&p.x), format_scalar(&p.y)],
            None => [
                self.approx[0].to_decimal(digits),
                self.approx[1].to_decimal(digits),
            ],
        }
    }
}

impl From<Point> for CenterValue {
    fn from(p: Point) -> CenterValue {
        CenterValue::exact(p)
    }
}

impl fmt::Display for CenterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y] = self.render(f.precision().unwrap_or(12));
        write!(f, "({x}, {y})")
    }
}

/// Twice the signed area of the triangle `(a, b, c)`, exact when all three are.
pub fn orientation_value(a: &CenterValue, b: &CenterValue, c: &CenterValue) -> Real {
    if let (Some(pa), Some(pb), Some(pc)) = (a.exact_point(), b.exact_point(), c.exact_point()) {
        return Real::from_ratio(&(pb - pa).cross(&(pc - pa)));
    }
    let [ax, ay] = a.coords();
    let [bx, by] = b.coords();
    let [cx, cy] = c.coords();
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

/// `true` when the three values are pairwise distinct and not collinear.
///
/// Exact values are decided exactly; otherwise the normalized area must
/// exceed `tol`.
pub fn affinely_independent(a: &CenterValue, b: &CenterValue, c: &CenterValue, tol: f64) -> bool {
    if let (Some(pa), Some(pb), Some(pc)) = (a.exact_point(), b.exact_point(), c.exact_point()) {
        return !(pb - pa).cross(&(pc - pa)).eq(&num_traits::Zero::zero());
    }
    let ab = a.distance(b).to_f64();
    let ac = a.distance(c).to_f64();
    let bc = b.distance(c).to_f64();
    let scale = ab.max(ac).max(bc);
    if scale == 0.0 || ab.min(ac).min(bc) <= tol * scale {
        return false;
    }
    orientation_value(a, b, c).to_f64().abs() > tol * scale * scale
}
