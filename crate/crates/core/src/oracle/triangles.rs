//! Classical triangle centers with exact radicals, and the coincidence
//! facts for them: the incenter equals the orthocenter only for equilateral
//! triangles, and lies on the line through centroid and orthocenter only
//! for isosceles ones.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Clock, TrialReport};
use crate::geom::{circumcircle, int, ratio, sign, Point, Scalar};
use crate::multiset_centers::{centroid_center, x_center_multiset, y_center_multiset};
use crate::real::Real;
use crate::symmetry::{Class, Multiset, Symmetric};
use crate::value::affinely_independent;

/// `sum q_i sqrt(r_i)` over rationals, kept with square-free radicands so
/// that it is zero exactly when every grouped coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SqrtSum {
    terms: BTreeMap<BigInt, Scalar>,
}

/// Writes a nonnegative integer as `s^2 f` with `f` square-free.
fn square_free(n: &BigInt) -> (BigInt, BigInt) {
    let mut s = BigInt::one();
    let mut f = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            f *= &p;
        }
        p += 1;
    }
    (s, f * rest)
}

impl SqrtSum {
    pub fn new() -> SqrtSum {
        SqrtSum::default()
    }

    /// Adds `coef * sqrt(radicand)` for `radicand >= 0`.
    pub fn add(&mut self, coef: &Scalar, radicand: &Scalar) {
        assert!(!radicand.is_negative(), "negative radicand");
        if radicand.is_zero() || coef.is_zero() {
            return;
        }
        let (p, q) = (radicand.numer(), radicand.denom());
        let (s, f) = square_free(&(p * q));
        let c = coef * Scalar::new(s, q.clone());
        let e = self.terms.entry(f.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&f);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_real(&self) -> Real {
        self.terms.iter().fold(Real::ZERO, |acc, (f, c)| {
            acc + Real::from_ratio(c) * Real::from_bigint(f).sqrt()
        })
    }

    /// Exact sign when at most two radicands occur, one of them 1.
    pub fn sign(&self) -> Option<i32> {
        let one = BigInt::one();
        let rational = self.terms.get(&one).cloned().unwrap_or_else(Scalar::zero);
        let others: Vec<(&BigInt, &Scalar)> = self.terms.iter().filter(|(f, _)| **f != one).collect();
        match others.as_slice() {
            [] => Some(sign(&rational)),
            [(f, c)] => {
                let (sa, sb) = (sign(&rational), sign(c));
                if sa == 0 || sa == sb {
                    return Some(if sb == 0 { sa } else { sb });
                }
                let r2 = &rational * &rational;
                let s2 = *c * *c * Scalar::from_integer((*f).clone());
                Some(if r2 > s2 { sa } else { sb })
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Triangle {
        Triangle { a, b, c }
    }

    pub fn vertices(&self) -> [&Point; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Squared lengths of the sides opposite `a`, `b`, `c`.
    pub fn sides_sq(&self) -> [Scalar; 3] {
        [self.b.dist_sq(&self.c), self.c.dist_sq(&self.a), self.a.dist_sq(&self.b)]
    }

    pub fn is_equilateral(&self) -> bool {
        let [x, y, z] = self.sides_sq();
        x == y && y == z
    }

    pub fn is_isosceles(&self) -> bool {
        let [x, y, z] = self.sides_sq();
        x == y || y == z || x == z
    }

    pub fn centroid(&self) -> Point {
        (&(&self.a + &self.b) + &self.c).scale(&ratio(1, 3))
    }

    pub fn circumcenter(&self) -> Point {
        circumcircle(&[self.a.clone(), self.b.clone(), self.c.clone()])
            .expect("nondegenerate triangle")
            .center
    }

    /// `a + b + c - 2 O`.
    pub fn orthocenter(&self) -> Point {
        let s = &(&self.a + &self.b) + &self.c;
        &s - &self.circumcenter().scale(&int(2))
    }

    /// Numerators of the incenter relative to `origin`: the incenter is
    /// `origin + (sx, sy) / perimeter`.
    fn incenter_offset(&self, origin: &Point) -> [SqrtSum; 2] {
        let mut out = [SqrtSum::new(), SqrtSum::new()];
        for (v, side) in self.vertices().into_iter().zip(self.sides_sq()) {
            let d = v - origin;
            out[0].add(&d.x, &side);
            out[1].add(&d.y, &side);
        }
        out
    }

    pub fn incenter_equals_orthocenter(&self) -> bool {
        let [x, y] = self.incenter_offset(&self.orthocenter());
        x.is_zero() && y.is_zero()
    }

    /// Whether incenter, centroid and orthocenter lie on one line.
    pub fn incenter_on_euler_line(&self) -> bool {
        let g = self.centroid();
        let h = &self.orthocenter() - &g;
        let mut cross = SqrtSum::new();
        for (v, side) in self.vertices().into_iter().zip(self.sides_sq()) {
            let d = v - &g;
            cross.add(&d.cross(&h), &side);
        }
        cross.is_zero()
    }

    pub fn incenter_f64(&self) -> [f64; 2] {
        let [la, lb, lc] = self.sides_sq().map(|s| Real::from_ratio(&s).sqrt());
        let p = la + lb + lc;
        let [ax, ay] = self.a.to_real();
        let [bx, by] = self.b.to_real();
        let [cx, cy] = self.c.to_real();
        [
            ((la * ax + lb * bx + lc * cx) / p).to_f64(),
            ((la * ay + lb * by + lc * cy) / p).to_f64(),
        ]
    }
}

/// Triangles `(0,0), (b,0), (x,y)` for `b in 1..=6`, `x in -6..=10`,
/// `y in 1..=10`.
pub fn triangle_grid() -> Vec<Triangle> {
    let mut out = Vec::new();
    for b in 1..=6 {
        for x in -6..=10 {
            for y in 1..=10 {
                out.push(Triangle::new(Point::from_ints(0, 0), Point::from_ints(b, 0), Point::from_ints(x, y)));
            }
        }
    }
    out
}

/// Sign of `incenter_y - orthocenter_y` for the isosceles triangle
/// `(0,0), (2,0), (1,h)`, exactly: that difference has the sign of
/// `h^2 - 1 - sqrt(1 + h^2)`.
pub fn apex_sweep_sign(h: &Scalar) -> i32 {
    let mut d = SqrtSum::new();
    d.add(&(h * h - int(1)), &int(1));
    d.add(&int(-1), &(int(1) + h * h));
    d.sign().expect("one radicand")
}

/// Classical coincidence facts over [`triangle_grid`], the apex sweep
/// through the equilateral height, and the matching facts for the centroid
/// and the two constructed multiset centers of the vertex set.
pub fn triangle_demo_suite() -> TrialReport {
    let start = Clock::start();
    let mut report = TrialReport::new("triangles", 0);
    let mut isosceles = 0;
    for t in triangle_grid() {
        let input = || format!("{} {} {}", t.a, t.b, t.c);
        let (eq, iso) = (t.is_equilateral(), t.is_isosceles());
        isosceles += iso as usize;
        let coincide = t.incenter_equals_orthocenter();
        report.check(coincide == eq, || (input(), format!("incenter = orthocenter: {eq}"), coincide.to_string()));
        let on_line = t.incenter_on_euler_line();
        report.check(on_line == iso, || (input(), format!("incenter on Euler line: {iso}"), on_line.to_string()));

        let m = Multiset::new(vec![t.a.clone(), t.b.clone(), t.c.clone()]).expect("three points");
        let class = m.classify();
        let want = if iso { Class::B } else { Class::C };
        report.check(class == want, || (input(), format!("class {want}"), format!("class {class}")));
        match (x_center_multiset(&m), y_center_multiset(&m)) {
            (Ok(x), Ok(y)) => {
                let c = centroid_center(&m);
                report.check(!x.same_as(&c, 0.0), || (input(), "x differs from the centroid".into(), x.to_string()));
                let indep = affinely_independent(&c, &x, &y, 1e-9);
                report.check(indep == !iso, || {
                    (input(), format!("centers independent: {}", !iso), format!("{c} {x} {y}"))
                });
            }
            (Err(e), _) | (_, Err(e)) => report.fail(input(), "x and y centers".into(), e.to_string()),
        }
    }
    report.notes.push(format!("{isosceles} isosceles triangles in the grid"));

    // h = k/8 brackets the equilateral height sqrt(3) between 13/8 and 14/8
    for k in 1..=40 {
        let h = ratio(k, 8);
        let t = Triangle::new(Point::from_ints(0, 0), Point::from_ints(2, 0), Point::new(int(1), h.clone()));
        let want = sign(&(&h * &h - int(3)));
        let got = apex_sweep_sign(&h);
        let numeric = t.incenter_f64()[1] - t.orthocenter().to_f64()[1];
        let numeric_sign = if numeric > 0.0 { 1 } else if numeric < 0.0 { -1 } else { 0 };
        report.check(got == want && numeric_sign == want, || {
            (format!("apex height {h}"), format!("sign {want}"), format!("exact {got}, numeric {numeric_sign}"))
        });
    }
    report.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(v: [(i64, i64); 3]) -> Triangle {
        Triangle::new(Point::from_ints(v[0].0, v[0].1), Point::from_ints(v[1].0, v[1].1), Point::from_ints(v[2].0, v[2].1))
    }

    #[test]
    fn square_free_parts() {
        assert_eq!(square_free(&BigInt::from(72)), (BigInt::from(6), BigInt::from(2)));
        assert_eq!(square_free(&BigInt::from(49)), (BigInt::from(7), BigInt::from(1)));
        assert_eq!(square_free(&BigInt::from(30)), (BigInt::from(1), BigInt::from(30)));
    }

    #[test]
    fn radicals_cancel() {
        let mut s = SqrtSum::new();
        s.add(&int(1), &int(8));
        s.add(&int(-2), &int(2));
        assert!(s.is_zero());
        s.add(&int(1), &ratio(1, 2));
        assert!(!s.is_zero());
        assert!((s.to_real().to_f64() - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn isosceles_centers_on_axis() {
        let t = tri([(0, 0), (2, 0), (1, 5)]);
        assert_eq!(t.centroid().x, int(1));
        assert_eq!(t.orthocenter().x, int(1));
        assert!((t.incenter_f64()[0] - 1.0).abs() < 1e-15);
        assert!(t.incenter_on_euler_line());
    }

    #[test]
    fn scalene_incenter_off_euler_line() {
        let t = tri([(0, 0), (4, 0), (1, 2)]);
        assert!(!t.is_isosceles());
        assert!(!t.incenter_on_euler_line());
        assert!(!t.incenter_equals_orthocenter());
    }

    #[test]
    fn apex_sweep_changes_sign_at_equilateral_height() {
        assert_eq!(apex_sweep_sign(&ratio(13, 8)), -1);
        assert_eq!(apex_sweep_sign(&ratio(14, 8)), 1);
        assert_eq!(apex_sweep_sign(&int(1)), -1);
    }

    #[test]
    fn grid_has_a_thousand_triangles() {
        assert!(triangle_grid().len() >= 1000);
    }
}
