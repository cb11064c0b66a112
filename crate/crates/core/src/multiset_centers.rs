//! Centers of plane multisets: the centroid, the circumcenter of cyclic
//! multisets, the center of rotational asymmetry `x_center_multiset` and
//! the center of axial asymmetry `y_center_multiset`.
//!
//! `x` equals the centroid exactly on class `A`; centroid, `x` and `y` are
//! affinely independent exactly on class `C`. Affine combinations of the
//! three reach every point fixed by the symmetry group
//! ([`center_through`]).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::angle::{angle_of, cmp_direction, Angle, DEFAULT_ANGLE_TOL};
use crate::cyclic::{
    a_center, b_center, b_center_labeled, CyclicCenter, CyclicConfiguration, CyclicPoint,
};
use crate::error::{Error, Result};
use crate::geom::{exact_sqrt, sign, Circle, Point, Scalar};
use crate::real::{sqrt_ratio, Real};
use crate::symmetry::{Class, FixedSet, LabeledMultiset, Multiset, Symmetric};
use crate::value::CenterValue;

pub fn centroid_center(s: &Multiset) -> CenterValue {
    CenterValue::exact(s.centroid())
}

/// Center of the circle through the distinct points of a cyclic multiset.
pub fn circumcenter_center(s: &Multiset) -> Result<CenterValue> {
    let pts = distinct(s.points());
    Ok(CenterValue::exact(crate::geom::circumcircle(&pts)?.center))
}

fn distinct(points: &[Point]) -> Vec<Point> {
    let mut v = points.to_vec();
    v.sort();
    v.dedup();
    v
}

fn cyclic_of(points: &[Point], labels: Option<&[u64]>) -> Result<CyclicConfiguration> {
    let mut seen = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        let l = labels.map_or(0, |l| l[i]);
        if let Some(prev) = seen.insert(p.clone(), l) {
            if prev != l {
                return Err(Error::Invalid("one point carries two labels".into()));
            }
        }
    }
    let pts: Vec<Point> = seen.keys().cloned().collect();
    let labs: Vec<u64> = seen.values().cloned().collect();
    CyclicConfiguration::from_points(&pts, labels.map(|_| labs.as_slice()))
}

/// [`a_center`] of the distinct points of a cyclic multiset.
pub fn a_center_of_points(s: &Multiset) -> Result<CenterValue> {
    let cfg = cyclic_of(s.points(), None)?;
    let p = a_center(&cfg)?;
    Ok(cfg.point_value(&p))
}

/// [`b_center`] of the distinct points of a cyclic multiset.
pub fn b_center_of_points(s: &Multiset) -> Result<CenterValue> {
    let cfg = cyclic_of(s.points(), None)?;
    Ok(cfg.center_value(&b_center(&cfg)?))
}

/// [`b_center_labeled`] of the distinct points of a cyclic labeled multiset.
pub fn b_center_labeled_of_points(s: &LabeledMultiset) -> Result<CenterValue> {
    let cfg = cyclic_of(s.points(), Some(s.labels()))?;
    Ok(cfg.center_value(&b_center_labeled(&cfg)?))
}

/// A ray from the centroid through at least one point of the multiset.
#[derive(Clone, Debug)]
pub struct Ray {
    /// Offset from the centroid of one member point.
    pub direction: Point,
    pub angle: Angle,
    pub members: Vec<usize>,
}

/// Circles about the centroid (decreasing radius, radius 0 included when
/// a point sits at the centroid) and rays from it through the points.
/// `counts[i][j]` is the number of points on ray `i` and circle `j`.
/// Points at the centroid are on no ray.
#[derive(Clone, Debug)]
pub struct RadialProfile {
    pub center: Point,
    pub radii_sq: Vec<Scalar>,
    pub rays: Vec<Ray>,
    pub counts: Vec<Vec<usize>>,
    pub at_center: usize,
}

impl RadialProfile {
    pub fn new(points: &[Point], center: &Point) -> Result<RadialProfile> {
        let d: Vec<Point> = points.iter().map(|p| p - center).collect();
        let mut radii_sq: Vec<Scalar> = d.iter().map(|v| v.norm_sq()).collect();
        radii_sq.sort_by(|a, b| b.cmp(a));
        radii_sq.dedup();
        let mut order: Vec<usize> = (0..d.len()).filter(|&i| !d[i].is_zero()).collect();
        order.sort_by(|&i, &j| cmp_direction(&d[i], &d[j]));
        let mut rays: Vec<Ray> = Vec::new();
        for i in order {
            match rays.last_mut() {
                Some(r) if cmp_direction(&r.direction, &d[i]) == Ordering::Equal => {
                    r.members.push(i)
                }
                _ => rays.push(Ray {
                    direction: d[i].clone(),
                    angle: angle_of(center, &points[i])?,
                    members: vec![i],
                }),
            }
        }
        let circle_index = |v: &Point| {
            let r = v.norm_sq();
            radii_sq.iter().position(|x| *x == r).expect("radius listed")
        };
        let counts = rays
            .iter()
            .map(|r| {
                let mut row = vec![0; radii_sq.len()];
                for &i in &r.members {
                    row[circle_index(&d[i])] += 1;
                }
                row
            })
            .collect();
        Ok(RadialProfile {
            center: center.clone(),
            at_center: d.iter().filter(|v| v.is_zero()).count(),
            radii_sq,
            rays,
            counts,
        })
    }

    /// Dense ranks of the count sequences in lexicographic order, from 1.
    pub fn ray_labels(&self) -> Vec<u64> {
        let mut seqs: Vec<&Vec<usize>> = self.counts.iter().collect();
        seqs.sort();
        seqs.dedup();
        self.counts
            .iter()
            .map(|c| seqs.binary_search(&c).expect("present") as u64 + 1)
            .collect()
    }

    /// Labeled configuration of the points where the rays meet the
    /// outermost circle.
    pub fn outer_configuration(&self, points: &[Point], tol: f64) -> Result<CyclicConfiguration> {
        let r1 = self.radii_sq[0].clone();
        let labels = self.ray_labels();
        let mut pts = Vec::with_capacity(self.rays.len());
        let mut anchors = Vec::with_capacity(self.rays.len());
        for (i, ray) in self.rays.iter().enumerate() {
            let on_outer = ray
                .members
                .iter()
                .find(|&&m| (&points[m] - &self.center).norm_sq() == r1);
            let anchor = match on_outer {
                Some(&m) => Some(points[m].clone()),
                None => exact_sqrt(&(&r1 / ray.direction.norm_sq()))
                    .map(|s| &self.center + &ray.direction.scale(&s)),
            };
            anchors.push(anchor);
            pts.push(CyclicPoint {
                theta: ray.angle,
                label: labels[i],
                source: Some(i),
            });
        }
        CyclicConfiguration::on_circle(Circle::new(self.center.clone(), r1), pts, anchors, tol)
    }
}

/// A value of `x_center_multiset` with the direction it makes from the
/// centroid (none when it is the centroid).
#[derive(Clone, Debug)]
pub struct XDetail {
    pub value: CenterValue,
    pub angle: Option<Angle>,
}

pub fn x_center_detail(s: &Multiset, tol: f64) -> Result<XDetail> {
    let c = s.centroid();
    if s.classify() == Class::A {
        return Ok(XDetail {
            value: CenterValue::exact(c),
            angle: None,
        });
    }
    let profile = RadialProfile::new(s.points(), &c)?;
    let cfg = profile.outer_configuration(s.points(), tol)?;
    match b_center_labeled(&cfg)? {
        CyclicCenter::Center => Err(Error::contract(
            "x_center: labeled rays",
            "labeled ray configuration is rotationally symmetric but the multiset is not",
        )),
        CyclicCenter::OnCircle(p) => Ok(XDetail {
            value: cfg.point_value(&p),
            angle: Some(p.theta),
        }),
    }
}

/// Center of rotational asymmetry: the centroid on class `A`, otherwise a
/// point on the outermost circle about the centroid.
pub fn x_center_multiset(s: &Multiset) -> Result<CenterValue> {
    x_center_detail(s, DEFAULT_ANGLE_TOL).map(|d| d.value)
}

/// Points on either side of the line through centroid and `x`, labeled by
/// their circle index about the centroid and about `x` (1 = outermost).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HalfPlaneLabels {
    pub left: Vec<(usize, usize)>,
    pub right: Vec<(usize, usize)>,
    pub on_line: usize,
}

impl HalfPlaneLabels {
    /// `+1` when the left bag is smaller: the lexicographically least label
    /// of the bag symmetric difference belongs to it. `-1` for the right.
    pub fn smaller_side(&self) -> Result<i32> {
        let mut count: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for l in &self.left {
            *count.entry(*l).or_default() += 1;
        }
        for r in &self.right {
            *count.entry(*r).or_default() -= 1;
        }
        match count.values().find(|v| **v != 0) {
            Some(v) if *v > 0 => Ok(1),
            Some(_) => Ok(-1),
            None => Err(Error::contract(
                "y_center: half-plane labels",
                "both half-planes carry the same labels",
            )),
        }
    }
}

/// Dense ranks of values in decreasing order, from 1.
fn decreasing_ranks<T: Clone>(values: &[T], cmp: impl Fn(&T, &T) -> Ordering) -> Vec<usize> {
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort_by(|a, b| cmp(b, a));
    sorted.dedup_by(|a, b| cmp(a, b) == Ordering::Equal);
    values
        .iter()
        .map(|v| {
            sorted
                .iter()
                .position(|s| cmp(s, v) == Ordering::Equal)
                .expect("present")
                + 1
        })
        .collect()
}

fn real_cmp(tol: f64) -> impl Fn(&Real, &Real) -> Ordering {
    move |a: &Real, b: &Real| {
        let scale = a.abs().to_f64().max(b.abs().to_f64()).max(1.0);
        let d = (*a - *b).to_f64();
        if d.abs() <= tol * scale {
            Ordering::Equal
        } else if d < 0.0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

/// Squared distance from `p` to `x`, exact when `x` is.
#[derive(Clone, Debug)]
pub(crate) enum Dist {
    Exact(Scalar),
    Approx(Real),
}

pub(crate) fn distances_to(points: &[Point], c: &Point, x: &XDetail) -> Vec<Dist> {
    match x.value.exact_point() {
        Some(xp) => points.iter().map(|p| Dist::Exact(p.dist_sq(xp))).collect(),
        None => {
            let angle = x.angle.expect("x differs from the centroid");
            let big_r = x.value.distance(&CenterValue::exact(c.clone()));
            points
                .iter()
                .map(|p| {
                    let rho2 = c.dist_sq(p);
                    if rho2.is_zero() {
                        return Dist::Approx(big_r * big_r);
                    }
                    let rho = sqrt_ratio(&rho2);
                    let delta = angle_of(c, p).expect("nonzero").sub(angle);
                    let [cos, _] = delta.unit_vector();
                    Dist::Approx(Real::from_ratio(&rho2) + big_r * big_r - (rho * big_r).mul_f64(2.0) * cos)
                })
                .collect()
        }
    }
}

pub(crate) fn distance_ranks(d: &[Dist], tol: f64) -> Vec<usize> {
    if d.iter().all(|v| matches!(v, Dist::Exact(_))) {
        let v: Vec<Scalar> = d
            .iter()
            .map(|v| match v {
                Dist::Exact(s) => s.clone(),
                Dist::Approx(_) => unreachable!(),
            })
            .collect();
        decreasing_ranks(&v, |a, b| a.cmp(b))
    } else {
        let v: Vec<Real> = d
            .iter()
            .map(|v| match v {
                Dist::Exact(s) => Real::from_ratio(s),
                Dist::Approx(r) => *r,
            })
            .collect();
        decreasing_ranks(&v, real_cmp(tol))
    }
}

pub(crate) fn exact_ranks(values: &[Scalar]) -> Vec<usize> {
    decreasing_ranks(values, |a, b| a.cmp(b))
}

/// Side of `p` relative to the line through `c` in the direction of `x`:
/// `+1` left, `-1` right, `0` on the line.
pub(crate) fn side_of(p: &Point, c: &Point, x: &XDetail, tol: f64) -> i32 {
    if let Some(xp) = x.value.exact_point() {
        return sign(&(xp - c).cross(&(p - c)));
    }
    if p == c {
        return 0;
    }
    let angle = x.angle.expect("x differs from the centroid");
    let delta = angle_of(c, p).expect("nonzero").sub(angle);
    if delta.eq_tol(&Angle::zero(), tol) || delta.eq_tol(&Angle::turns_ratio(1, 2), tol) {
        0
    } else if delta.cmp_tol(&Angle::turns_ratio(1, 2), tol) == Ordering::Less {
        1
    } else {
        -1
    }
}

/// Unit normal to the line through `c` and `x`, rotated a quarter turn
/// counterclockwise from the direction `c -> x`, times `len`.
pub(crate) fn normal_offset(c: &Point, x: &XDetail, len: &Length, sign: i32) -> CenterValue {
    if let (Some(xp), Length::Exact(l)) = (x.value.exact_point(), len) {
        let d = xp - c;
        if let Some(norm) = exact_sqrt(&d.norm_sq()) {
            let k = l / norm * Scalar::from_integer(sign.into());
            return CenterValue::exact(c + &d.perp().scale(&k));
        }
    }
    let [ux, uy] = match x.value.exact_point() {
        Some(xp) => {
            let [dx, dy] = (xp - c).to_real();
            let n = (dx * dx + dy * dy).sqrt();
            [dx / n, dy / n]
        }
        None => x.angle.expect("x differs from the centroid").unit_vector(),
    };
    let l = len.to_real().mul_f64(sign as f64);
    let [cx, cy] = c.to_real();
    CenterValue::approx([cx - uy * l, cy + ux * l])
}

/// Sum of distances, exact when every distance is rational.
#[derive(Clone, Debug)]
pub enum Length {
    Exact(Scalar),
    Approx(Real),
}

impl Length {
    pub fn to_real(&self) -> Real {
        match self {
            Length::Exact(s) => Real::from_ratio(s),
            Length::Approx(r) => *r,
        }
    }
}

pub(crate) fn sum_of_distances(points: &[Point], c: &Point) -> Length {
    let mut exact = Some(Scalar::zero());
    let mut approx = Real::ZERO;
    for p in points {
        let d2 = c.dist_sq(p);
        approx = approx + sqrt_ratio(&d2);
        exact = exact.and_then(|s| exact_sqrt(&d2).map(|d| s + d));
    }
    match exact {
        Some(s) => Length::Exact(s),
        None => Length::Approx(approx),
    }
}

pub fn half_plane_labels(s: &Multiset, x: &XDetail, tol: f64) -> HalfPlaneLabels {
    let c = s.centroid();
    let cring = exact_ranks(&s.points().iter().map(|p| c.dist_sq(p)).collect::<Vec<_>>());
    let xring = distance_ranks(&distances_to(s.points(), &c, x), tol);
    let mut out = HalfPlaneLabels::default();
    for (i, p) in s.points().iter().enumerate() {
        match side_of(p, &c, x, tol) {
            1 => out.left.push((cring[i], xring[i])),
            -1 => out.right.push((cring[i], xring[i])),
            _ => out.on_line += 1,
        }
    }
    out.left.sort();
    out.right.sort();
    out
}

pub fn y_center_with(s: &Multiset, x: &XDetail, tol: f64) -> Result<CenterValue> {
    let c = s.centroid();
    let side = half_plane_labels(s, x, tol).smaller_side()?;
    let lambda = sum_of_distances(s.points(), &c);
    Ok(normal_offset(&c, x, &lambda, side))
}

/// Center of axial asymmetry: the centroid outside class `C`; on class `C`
/// the point at distance `sum |V - c|` from the centroid `c`, perpendicular
/// to the line through `c` and `x`, on the side whose label bag is smaller.
pub fn y_center_multiset(s: &Multiset) -> Result<CenterValue> {
    y_center_multiset_tol(s, DEFAULT_ANGLE_TOL)
}

pub fn y_center_multiset_tol(s: &Multiset, tol: f64) -> Result<CenterValue> {
    if s.classify() != Class::C {
        return Ok(centroid_center(s));
    }
    let x = x_center_detail(s, tol)?;
    y_center_with(s, &x, tol)
}

/// Whether `x` is a possible center value of `s`: a fixed point of its
/// symmetry group.
pub fn is_center_value(s: &Multiset, x: &Point) -> bool {
    s.fixed_set().contains(x)
}

/// Affine coefficients `(l1, l2, l3)`, summing to 1, expressing a point
/// through the centroid, `x` and `y`.
#[derive(Clone, Debug)]
pub struct Coefficients {
    pub exact: Option<[Scalar; 3]>,
    pub approx: [Real; 3],
}

impl Coefficients {
    fn exact(l: [Scalar; 3]) -> Coefficients {
        let approx = [
            Real::from_ratio(&l[0]),
            Real::from_ratio(&l[1]),
            Real::from_ratio(&l[2]),
        ];
        Coefficients {
            exact: Some(l),
            approx,
        }
    }

    /// `l1 c + l2 x + l3 y`.
    pub fn evaluate(&self, c: &CenterValue, x: &CenterValue, y: &CenterValue) -> CenterValue {
        if let (Some(l), Some(pc), Some(px), Some(py)) =
            (&self.exact, c.exact_point(), x.exact_point(), y.exact_point())
        {
            return CenterValue::exact(&(&pc.scale(&l[0]) + &px.scale(&l[1])) + &py.scale(&l[2]));
        }
        let [a, b, g] = self.approx;
        let (c, x, y) = (c.coords(), x.coords(), y.coords());
        CenterValue::approx([
            a * c[0] + b * x[0] + g * y[0],
            a * c[1] + b * x[1] + g * y[1],
        ])
    }
}

/// Solves for affine coefficients of `target` over the three centers
/// according to the class of the object.
pub(crate) fn affine_coefficients(
    class: Class,
    c: &CenterValue,
    x: &CenterValue,
    y: &CenterValue,
    target: &Point,
) -> Result<Coefficients> {
    let one = Scalar::one();
    let zero = Scalar::zero();
    match class {
        Class::A => Ok(Coefficients::exact([one, zero.clone(), zero])),
        Class::B => {
            if let (Some(pc), Some(px)) = (c.exact_point(), x.exact_point()) {
                let d = px - pc;
                let t = (target - pc).dot(&d) / d.norm_sq();
                return Ok(Coefficients::exact([&one - &t, t, zero]));
            }
            let [cx, cy] = c.coords();
            let [xx, xy] = x.coords();
            let [tx, ty] = target.to_real();
            let (dx, dy) = (xx - cx, xy - cy);
            let t = ((tx - cx) * dx + (ty - cy) * dy) / (dx * dx + dy * dy);
            Ok(Coefficients {
                exact: None,
                approx: [Real::ONE - t, t, Real::ZERO],
            })
        }
        Class::C => {
            if let (Some(pc), Some(px), Some(py)) = (c.exact_point(), x.exact_point(), y.exact_point()) {
                let u = px - pc;
                let v = py - pc;
                let w = target - pc;
                let det = u.cross(&v);
                if det.is_zero() {
                    return Err(Error::contract(
                        "center_through: independence",
                        "centers are collinear on a class C object",
                    ));
                }
                let l2 = w.cross(&v) / &det;
                let l3 = u.cross(&w) / &det;
                let l1 = &one - &l2 - &l3;
                return Ok(Coefficients::exact([l1, l2, l3]));
            }
            let [cx, cy] = c.coords();
            let [xx, xy] = x.coords();
            let [yx, yy] = y.coords();
            let [tx, ty] = target.to_real();
            let (ux, uy) = (xx - cx, xy - cy);
            let (vx, vy) = (yx - cx, yy - cy);
            let (wx, wy) = (tx - cx, ty - cy);
            let det = ux * vy - uy * vx;
            let l2 = (wx * vy - wy * vx) / det;
            let l3 = (ux * wy - uy * wx) / det;
            Ok(Coefficients {
                exact: None,
                approx: [Real::ONE - l2 - l3, l2, l3],
            })
        }
    }
}

/// Affine coefficients over (centroid, `x`, `y`) reaching a fixed point
/// of the symmetry group of `s`.
pub fn center_through(s: &Multiset, target: &Point) -> Result<Coefficients> {
    let fs = s.fixed_set();
    if !fs.contains(target) {
        return Err(Error::NotFixed);
    }
    let c = centroid_center(s);
    let x = x_center_multiset(s)?;
    let y = y_center_multiset(s)?;
    affine_coefficients(fs.class(), &c, &x, &y, target)
}

/// Polygon center obtained by evaluating a multiset center on the vertices.
pub fn induced_polygon_center<F>(f: F) -> impl Fn(&crate::symmetry::Polygon) -> Result<CenterValue>
where
    F: Fn(&Multiset) -> Result<CenterValue>,
{
    move |p| f(&p.vertex_multiset())
}

/// Samples points of a fixed set from small integers.
pub fn fixed_set_sample(fs: &FixedSet, i: i64, j: i64) -> Point {
    fs.sample(&Scalar::from_integer(i.into()), &Scalar::from_integer(j.into()))
}
