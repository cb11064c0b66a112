//! Exact plane arithmetic: rational points, similarities, circles.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::real::{sqrt_ratio, Real};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Exact square root of a rational when it is a perfect square.
pub fn exact_sqrt(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    let n = s.numer().sqrt();
    let d = s.denom().sqrt();
    (&n * &n == *s.numer() && &d * &d == *s.denom()).then(|| Scalar::new(n, d))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Point {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point::new(int(x), int(y))
    }

    pub fn origin() -> Point {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, k: &Scalar) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, o: &Point) -> Scalar {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &Point) -> Scalar {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }

    pub fn dist_sq(&self, o: &Point) -> Scalar {
        (self - o).norm_sq()
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> Point {
        Point::new(-&self.y, self.x.clone())
    }

    pub fn midpoint(&self, o: &Point) -> Point {
        let half = ratio(1, 2);
        Point::new((&self.x + &o.x) * &half, (&self.y + &o.y) * &half)
    }

    pub fn to_real(&self) -> [Real; 2] {
        [Real::from_ratio(&self.x), Real::from_ratio(&self.y)]
    }

    pub fn to_f64(&self) -> [f64; 2] {
        let [x, y] = self.to_real();
        [x.to_f64(), y.to_f64()]
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_scalar(&self.x), format_scalar(&self.y))
    }
}

/// Orientation of `c` relative to the directed line `a -> b`: +1 left, -1 right, 0 on.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    let s = (b - a).cross(&(c - a));
    sign(&s)
}

pub fn sign(s: &Scalar) -> i32 {
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

pub fn all_collinear(points: &[Point]) -> bool {
    let Some(a) = points.first() else {
        return true;
    };
    let Some(b) = points.iter().find(|p| *p != a) else {
        return true;
    };
    points.iter().all(|p| orient(a, b, p) == 0)
}

/// A plane similarity `p -> M p + t` where `M` is a positive multiple of an
/// orthogonal matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Similarity {
    m: [[Scalar; 2]; 2],
    t: Point,
}

impl Similarity {
    pub fn identity() -> Similarity {
        Similarity::direct(int(1), int(0), Point::origin())
    }

    /// `p -> (a -b; b a) p + t`; scale is `sqrt(a^2 + b^2)`.
    pub fn direct(a: Scalar, b: Scalar, t: Point) -> Similarity {
        assert!(!(a.is_zero() && b.is_zero()), "degenerate similarity");
        Similarity {
            m: [[a.clone(), -&b], [b, a]],
            t,
        }
    }

    /// `p -> (a b; b -a) p + t`, an orientation-reversing similarity.
    pub fn indirect(a: Scalar, b: Scalar, t: Point) -> Similarity {
        assert!(!(a.is_zero() && b.is_zero()), "degenerate similarity");
        Similarity {
            m: [[a.clone(), b.clone()], [b, -a]],
            t,
        }
    }

    pub fn translation(t: Point) -> Similarity {
        Similarity::direct(int(1), int(0), t)
    }

    /// Rotation about `center` with rational cosine and sine.
    pub fn rotation_about(center: &Point, cos: Scalar, sin: Scalar) -> Similarity {
        let lin = Similarity::direct(cos, sin, Point::origin());
        let t = center - &lin.apply(center);
        Similarity { m: lin.m, t }
    }

    /// Reflection across the line through `point` with direction `dir`.
    pub fn reflection_across(point: &Point, dir: &Point) -> Similarity {
        let n = dir.norm_sq();
        let a = (&dir.x * &dir.x - &dir.y * &dir.y) / &n;
        let b = (int(2) * &dir.x * &dir.y) / &n;
        let lin = Similarity::indirect(a, b, Point::origin());
        let t = point - &lin.apply(point);
        Similarity { m: lin.m, t }
    }

    pub fn matrix(&self) -> &[[Scalar; 2]; 2] {
        &self.m
    }

    pub fn translation_part(&self) -> &Point {
        &self.t
    }

    pub fn is_reflecting(&self) -> bool {
        sign(&(&self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0])) < 0
    }

    pub fn is_identity(&self) -> bool {
        *self == Similarity::identity()
    }

    pub fn scale_sq(&self) -> Scalar {
        &self.m[0][0] * &self.m[0][0] + &self.m[1][0] * &self.m[1][0]
    }

    /// First column of the linear part: `(scale cos phi, scale sin phi)`.
    pub fn rotation_vector(&self) -> Point {
        Point::new(self.m[0][0].clone(), self.m[1][0].clone())
    }

    pub fn apply(&self, p: &Point) -> Point {
        let m = &self.m;
        Point::new(
            &m[0][0] * &p.x + &m[0][1] * &p.y + &self.t.x,
            &m[1][0] * &p.x + &m[1][1] * &p.y + &self.t.y,
        )
    }

    /// Applies only the linear part (for free vectors).
    pub fn apply_vector(&self, v: &Point) -> Point {
        let m = &self.m;
        Point::new(
            &m[0][0] * &v.x + &m[0][1] * &v.y,
            &m[1][0] * &v.x + &m[1][1] * &v.y,
        )
    }

    pub fn apply_real(&self, p: &[Real; 2]) -> [Real; 2] {
        let m = &self.m;
        let r = |s: &Scalar| Real::from_ratio(s);
        [
            r(&m[0][0]) * p[0] + r(&m[0][1]) * p[1] + r(&self.t.x),
            r(&m[1][0]) * p[0] + r(&m[1][1]) * p[1] + r(&self.t.y),
        ]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Similarity) -> Similarity {
        let a = &self.m;
        let b = &other.m;
        let mul = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Similarity {
            m: [[mul(0, 0), mul(0, 1)], [mul(1, 0), mul(1, 1)]],
            t: &self.apply_vector(&other.t) + &self.t,
        }
    }

    pub fn inverse(&self) -> Similarity {
        let m = &self.m;
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        let inv = [
            [&m[1][1] / &det, -&m[0][1] / &det],
            [-&m[1][0] / &det, &m[0][0] / &det],
        ];
        let lin = Similarity {
            m: inv,
            t: Point::origin(),
        };
        let t = lin.apply_vector(&self.t);
        Similarity {
            m: lin.m,
            t: Point::new(-t.x, -t.y),
        }
    }
}

/// A circle with rational center and rational squared radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub center: Point,
    pub radius_sq: Scalar,
}

impl Circle {
    pub fn new(center: Point, radius_sq: Scalar) -> Circle {
        assert!(!radius_sq.is_negative(), "negative squared radius");
        Circle { center, radius_sq }
    }

    pub fn unit() -> Circle {
        Circle::new(Point::origin(), int(1))
    }

    pub fn radius(&self) -> Real {
        sqrt_ratio(&self.radius_sq)
    }

    pub fn exact_radius(&self) -> Option<Scalar> {
        exact_sqrt(&self.radius_sq)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.center.dist_sq(p) == self.radius_sq
    }

    pub fn transform(&self, t: &Similarity) -> Circle {
        Circle::new(t.apply(&self.center), &self.radius_sq * t.scale_sq())
    }
}

/// Arithmetic mean of a nonempty multiset.
pub fn centroid(points: &[Point]) -> Result<Point> {
    if points.is_empty() {
        return Err(Error::Empty);
    }
    let n = int(points.len() as i64);
    let (sx, sy) = points.iter().fold((Scalar::zero(), Scalar::zero()), |(sx, sy), p| {
        (sx + &p.x, sy + &p.y)
    });
    Ok(Point::new(sx / &n, sy / n))
}

/// The circle through a set of distinct concyclic points.
///
/// One point gives a radius-0 circle, two points give the circle on their
/// diameter.
pub fn circumcircle(points: &[Point]) -> Result<Circle> {
    let mut sorted = points.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Invalid("circumcircle needs distinct points".into()));
    }
    match points {
        [] => Err(Error::Empty),
        [p] => Ok(Circle::new(p.clone(), Scalar::zero())),
        [p, q] => {
            let c = p.midpoint(q);
            let r = c.dist_sq(p);
            Ok(Circle::new(c, r))
        }
        [a, b, rest @ ..] => {
            let c3 = rest.iter().find(|c| orient(a, b, c) != 0).ok_or(Error::NotCyclic)?;
            let center = circumcenter3(a, b, c3);
            let r = center.dist_sq(a);
            if points.iter().all(|p| center.dist_sq(p) == r) {
                Ok(Circle::new(center, r))
            } else {
                Err(Error::NotCyclic)
            }
        }
    }
}

fn circumcenter3(a: &Point, b: &Point, c: &Point) -> Point {
    let ab = b - a;
    let ac = c - a;
    let d = int(2) * ab.cross(&ac);
    let ab2 = ab.norm_sq();
    let ac2 = ac.norm_sq();
    let ux = (&ac.y * &ab2 - &ab.y * &ac2) / &d;
    let uy = (&ab.x * &ac2 - &ac.x * &ab2) / &d;
    Point::new(&a.x + ux, &a.y + uy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn apply_similarity_examples() {
        assert_eq!(Similarity::identity().apply(&p(3, 4)), p(3, 4));
        let half_turn = Similarity::direct(int(-1), int(0), Point::origin());
        assert_eq!(half_turn.apply(&p(1, 0)), p(-1, 0));
        let st = Similarity::direct(int(2), int(0), p(1, 0));
        assert_eq!(st.apply(&p(1, 1)), p(3, 2));
    }

    #[test]
    fn composition_and_inverse() {
        let t1 = Similarity::direct(ratio(3, 5), ratio(4, 5), p(1, -2));
        let t2 = Similarity::indirect(int(2), int(1), p(0, 3));
        let q = Point::new(ratio(7, 3), ratio(-1, 2));
        assert_eq!(t1.compose(&t2).apply(&q), t1.apply(&t2.apply(&q)));
        assert_eq!(t2.inverse().apply(&t2.apply(&q)), q);
        assert!(t2.is_reflecting());
        assert!(!t1.is_reflecting());
        assert!(t1.compose(&t1.inverse()).is_identity());
    }

    #[test]
    fn reflection_fixes_its_axis() {
        let r = Similarity::reflection_across(&p(1, 1), &p(1, 2));
        assert_eq!(r.apply(&p(2, 3)), p(2, 3));
        assert_eq!(r.apply(&r.apply(&p(5, -7))), p(5, -7));
    }

    #[test]
    fn centroid_examples() {
        let c = centroid(&[p(0, 0), p(1, 0), p(0, 1)]).unwrap();
        assert_eq!(c, Point::new(ratio(1, 3), ratio(1, 3)));
        assert_eq!(centroid(&vec![p(2, 3); 4]).unwrap(), p(2, 3));
        assert_eq!(
            centroid(&[p(1, 0), p(-1, 0), p(0, 2)]).unwrap(),
            Point::new(int(0), ratio(2, 3))
        );
        assert_eq!(centroid(&[]), Err(Error::Empty));
    }

    #[test]
    fn circumcircle_examples() {
        let c = circumcircle(&[p(1, 0), p(0, 1), p(-1, 0)]).unwrap();
        assert_eq!(c, Circle::new(p(0, 0), int(1)));
        let c = circumcircle(&[p(0, 0), p(2, 0)]).unwrap();
        assert_eq!(c, Circle::new(p(1, 0), int(1)));
        let c = circumcircle(&[p(0, 0), p(4, 0), p(0, 4), p(4, 4)]).unwrap();
        assert_eq!(c, Circle::new(p(2, 2), int(8)));
        assert_eq!(circumcircle(&[p(0, 0), p(1, 0), p(2, 0)]), Err(Error::NotCyclic));
        assert_eq!(circumcircle(&[p(0, 0), p(1, 0), p(0, 1), p(3, 3)]), Err(Error::NotCyclic));
        assert_eq!(circumcircle(&[p(1, 1)]).unwrap().radius_sq, int(0));
    }

    #[test]
    fn exact_sqrt_detects_squares() {
        assert_eq!(exact_sqrt(&ratio(16, 9)), Some(ratio(4, 3)));
        assert_eq!(exact_sqrt(&int(2)), None);
    }
}
