//! Symmetry groups of multisets, labeled multisets and polygons, their
//! fixed-point sets and the resulting three-way classification.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{centroid, format_scalar, Point, Scalar, Similarity};
use crate::value::CenterValue;

/// Finite collection of plane points, repetitions allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiset {
    points: Vec<Point>,
}

impl Multiset {
    pub fn new(points: Vec<Point>) -> Result<Multiset> {
        if points.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Multiset { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn centroid(&self) -> Point {
        centroid(&self.points).expect("nonempty")
    }

    pub fn transform(&self, t: &Similarity) -> Multiset {
        Multiset {
            points: self.points.iter().map(|p| t.apply(p)).collect(),
        }
    }

    /// Same multiset, points in canonical order.
    pub fn sorted(&self) -> Vec<Point> {
        let mut v = self.points.clone();
        v.sort();
        v
    }
}

/// Multiset whose points carry natural-number labels. Only the order of
/// the labels is meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledMultiset {
    points: Vec<Point>,
    labels: Vec<u64>,
}

impl LabeledMultiset {
    pub fn new(points: Vec<Point>, labels: Vec<u64>) -> Result<LabeledMultiset> {
        if points.is_empty() {
            return Err(Error::Empty);
        }
        if points.len() != labels.len() {
            return Err(Error::Invalid(format!(
                "{} points but {} labels",
                points.len(),
                labels.len()
            )));
        }
        Ok(LabeledMultiset { points, labels })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn transform(&self, t: &Similarity) -> LabeledMultiset {
        LabeledMultiset {
            points: self.points.iter().map(|p| t.apply(p)).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn unlabeled(&self) -> Multiset {
        Multiset {
            points: self.points.clone(),
        }
    }
}

/// Closed chain of `n >= 3` vertices; vertex `i` is adjacent to `i - 1`
/// and `i + 1` modulo `n`. Self-intersections and repeated vertices are
/// allowed.
#[derive(Clone, Debug)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Polygon> {
        if vertices.len() < 3 {
            return Err(Error::Invalid(format!(
                "a polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_multiset(&self) -> Multiset {
        Multiset {
            points: self.vertices.clone(),
        }
    }

    pub fn centroid(&self) -> Point {
        centroid(&self.vertices).expect("nonempty")
    }

    pub fn transform(&self, t: &Similarity) -> Polygon {
        Polygon {
            vertices: self.vertices.iter().map(|p| t.apply(p)).collect(),
        }
    }

    /// Relabeling by an element of the dihedral group: start at `shift`,
    /// optionally walking backwards.
    pub fn relabeled(&self, shift: usize, reverse: bool) -> Polygon {
        let n = self.len();
        let vertices = (0..n)
            .map(|i| {
                let j = if reverse { (shift + n - i % n) % n } else { (shift + i) % n };
                self.vertices[j].clone()
            })
            .collect();
        Polygon { vertices }
    }
}

/// Two polygons are equal when their vertex cycles agree up to rotation
/// and reversal of the labeling.
impl PartialEq for Polygon {
    fn eq(&self, other: &Polygon) -> bool {
        dihedral_equivalent(&self.vertices, &other.vertices)
    }
}

impl Eq for Polygon {}

pub fn dihedral_equivalent(a: &[Point], b: &[Point]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    if n == 0 {
        return true;
    }
    (0..n).any(|s| {
        (0..n).all(|i| a[i] == b[(s + i) % n]) || (0..n).all(|i| a[i] == b[(s + n - i) % n])
    })
}

/// A line through `point` with direction `direction`. Axes produced here
/// pass through the group center and have a canonical direction: first
/// nonzero coordinate equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    pub point: Point,
    pub direction: Point,
}

impl Line {
    pub fn new(point: Point, direction: Point) -> Line {
        assert!(!direction.is_zero(), "line direction must be nonzero");
        Line {
            point,
            direction: normalize_direction(&direction),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        (p - &self.point).cross(&self.direction).is_zero()
    }

    pub fn same_line(&self, other: &Line) -> bool {
        self.direction.cross(&other.direction).is_zero() && self.contains(&other.point)
    }

    pub fn transform(&self, t: &Similarity) -> Line {
        Line::new(t.apply(&self.point), t.apply_vector(&self.direction))
    }

    /// Signed distance of `p` from the line divided by the direction length,
    /// times the direction length squared: the cross product with the
    /// direction. Only its sign is meaningful across lines.
    pub fn side(&self, p: &Point) -> Scalar {
        self.direction.cross(&(p - &self.point))
    }

    pub fn reflection(&self) -> Similarity {
        Similarity::reflection_across(&self.point, &self.direction)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "through {} along {}", self.point, self.direction)
    }
}

fn normalize_direction(d: &Point) -> Point {
    let lead = if d.x.is_zero() { &d.y } else { &d.x };
    let inv = Scalar::one() / lead;
    d.scale(&inv)
}

/// Stabilizer of an object among plane isometries.
///
/// A finite group is cyclic of order `rotation_order` or dihedral with as
/// many axes. A multiset of `n` copies of one point has the whole rotation
/// group about it as stabilizer; that case is flagged `continuous`.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    pub center: Point,
    pub rotation_order: usize,
    pub axes: Vec<Line>,
    pub continuous: bool,
    /// Every group element as an isometry (empty for the continuous group).
    pub elements: Vec<Similarity>,
}

impl PartialEq for SymmetryGroup {
    fn eq(&self, other: &SymmetryGroup) -> bool {
        self.center == other.center
            && self.rotation_order == other.rotation_order
            && self.continuous == other.continuous
            && self.axes == other.axes
    }
}

impl SymmetryGroup {
    fn from_elements(center: Point, elements: Vec<Similarity>) -> SymmetryGroup {
        let rotation_order = elements.iter().filter(|e| !e.is_reflecting()).count();
        let mut axes: Vec<Line> = elements
            .iter()
            .filter(|e| e.is_reflecting())
            .map(|e| reflection_axis(e, &center))
            .collect();
        axes.sort();
        axes.dedup();
        SymmetryGroup {
            center,
            rotation_order,
            axes,
            continuous: false,
            elements,
        }
    }

    fn continuous_about(center: Point) -> SymmetryGroup {
        SymmetryGroup {
            center,
            rotation_order: 1,
            axes: Vec::new(),
            continuous: true,
            elements: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        !self.continuous && self.rotation_order == 1 && self.axes.is_empty()
    }

    pub fn order(&self) -> Option<usize> {
        (!self.continuous).then(|| self.rotation_order + self.axes.len())
    }

    /// Conjugate group `t G t^-1`, the stabilizer of the transformed object.
    pub fn transform(&self, t: &Similarity) -> SymmetryGroup {
        let inv = t.inverse();
        let elements = self
            .elements
            .iter()
            .map(|e| t.compose(e).compose(&inv))
            .collect();
        let mut axes: Vec<Line> = self.axes.iter().map(|a| a.transform(t)).collect();
        axes.sort();
        SymmetryGroup {
            center: t.apply(&self.center),
            rotation_order: self.rotation_order,
            axes,
            continuous: self.continuous,
            elements,
        }
    }
}

impl fmt::Display for SymmetryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.continuous {
            return write!(f, "O(2) about {}", self.center);
        }
        let k = self.rotation_order;
        if self.axes.is_empty() {
            write!(f, "C{k} about {}", self.center)
        } else {
            write!(f, "D{k} about {}", self.center)
        }
    }
}

/// Fixed line of a reflection known to fix `center`.
fn reflection_axis(e: &Similarity, center: &Point) -> Line {
    // The linear part (a b; b -a) fixes (a + 1, b), or (0, 1) when a = -1.
    let m = e.matrix();
    let (a, b) = (&m[0][0], &m[1][0]);
    let d = Point::new(a + Scalar::one(), b.clone());
    let d = if d.is_zero() {
        Point::from_ints(0, 1)
    } else {
        d
    };
    Line::new(center.clone(), d)
}

/// Linear map conjugated to act about `center`.
fn about(center: &Point, lin: Similarity) -> Similarity {
    let t = center - &lin.apply(center);
    Similarity::translation(t).compose(&lin)
}

fn labeled_key(points: &[Point], labels: &[u64], t: Option<&Similarity>) -> Vec<(Point, u64)> {
    let mut v: Vec<(Point, u64)> = points
        .iter()
        .zip(labels)
        .map(|(p, l)| (t.map_or_else(|| p.clone(), |t| t.apply(p)), *l))
        .collect();
    v.sort();
    v
}

/// Stabilizer of a labeled point list.
///
/// Every symmetry fixes the centroid `c` and sends a farthest point `p`
/// to a point `q` with the same label at the same distance. For each such
/// `q` there is exactly one rotation and one reflection about `c` taking
/// `p` to `q`, both with rational matrices; each is kept if it maps the
/// labeled multiset onto itself.
fn stabilizer(points: &[Point], labels: &[u64]) -> SymmetryGroup {
    let c = centroid(points).expect("nonempty");
    let d: Vec<Point> = points.iter().map(|p| p - &c).collect();
    let far = (0..d.len())
        .max_by(|&i, &j| d[i].norm_sq().cmp(&d[j].norm_sq()).then(j.cmp(&i)))
        .expect("nonempty");
    let r2 = d[far].norm_sq();
    if r2.is_zero() {
        return SymmetryGroup::continuous_about(c);
    }
    let p = &d[far];
    let target = labeled_key(points, labels, None);
    let mut elements = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (q, lq) in d.iter().zip(labels) {
        if *lq != labels[far] || q.norm_sq() != r2 || !seen.insert(q.clone()) {
            continue;
        }
        let rot = Similarity::direct(p.dot(q) / &r2, p.cross(q) / &r2, Point::origin());
        let refl = Similarity::indirect(
            (&q.x * &p.x - &q.y * &p.y) / &r2,
            (&q.x * &p.y + &q.y * &p.x) / &r2,
            Point::origin(),
        );
        for lin in [rot, refl] {
            let t = about(&c, lin);
            if labeled_key(points, labels, Some(&t)) == target {
                elements.push(t);
            }
        }
    }
    SymmetryGroup::from_elements(c, elements)
}

pub fn symmetry_group_multiset(s: &Multiset) -> SymmetryGroup {
    stabilizer(&s.points, &vec![0; s.len()])
}

pub fn symmetry_group_labeled(s: &LabeledMultiset) -> SymmetryGroup {
    stabilizer(&s.points, &s.labels)
}

/// Elements of the vertex-multiset group that also preserve adjacency.
pub fn symmetry_group_polygon(p: &Polygon) -> SymmetryGroup {
    let vg = symmetry_group_multiset(&p.vertex_multiset());
    if vg.continuous {
        // every vertex coincides: any isometry fixing it preserves the cycle
        return vg;
    }
    let elements = vg
        .elements
        .into_iter()
        .filter(|t| {
            let image: Vec<Point> = p.vertices.iter().map(|v| t.apply(v)).collect();
            dihedral_equivalent(&image, &p.vertices)
        })
        .collect();
    SymmetryGroup::from_elements(vg.center, elements)
}

/// Points fixed by every element of a symmetry group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedSet {
    Plane,
    Line(Line),
    SinglePoint(Point),
}

impl FixedSet {
    pub fn contains(&self, p: &Point) -> bool {
        match self {
            FixedSet::Plane => true,
            FixedSet::Line(l) => l.contains(p),
            FixedSet::SinglePoint(q) => p == q,
        }
    }

    /// Exact test for exact values; otherwise the distance to the set must
    /// be at most `tol`.
    pub fn contains_value(&self, v: &CenterValue, tol: f64) -> bool {
        if let Some(p) = v.exact_point() {
            return self.contains(p);
        }
        let [x, y] = v.coords();
        match self {
            FixedSet::Plane => true,
            FixedSet::Line(l) => {
                let [px, py] = l.point.to_real();
                let [dx, dy] = l.direction.to_real();
                let cross = dx * (y - py) - dy * (x - px);
                let len = (dx * dx + dy * dy).sqrt();
                (cross / len).abs().to_f64() <= tol
            }
            FixedSet::SinglePoint(q) => v.distance(&CenterValue::exact(q.clone())).to_f64() <= tol,
        }
    }

    pub fn class(&self) -> Class {
        match self {
            FixedSet::SinglePoint(_) => Class::A,
            FixedSet::Line(_) => Class::B,
            FixedSet::Plane => Class::C,
        }
    }

    /// A sample point of the set: `t` parametrizes lines, `(t, u)` the plane.
    pub fn sample(&self, t: &Scalar, u: &Scalar) -> Point {
        match self {
            FixedSet::Plane => Point::new(t.clone(), u.clone()),
            FixedSet::Line(l) => &l.point + &l.direction.scale(t),
            FixedSet::SinglePoint(p) => p.clone(),
        }
    }
}

pub fn fixed_set(g: &SymmetryGroup) -> FixedSet {
    if g.continuous || g.rotation_order >= 2 {
        FixedSet::SinglePoint(g.center.clone())
    } else if let [axis] = g.axes.as_slice() {
        FixedSet::Line(axis.clone())
    } else {
        FixedSet::Plane
    }
}

/// `A`: one fixed point; `B`: a line of fixed points; `C`: trivial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Class {
    A,
    B,
    C,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::A => "A",
            Class::B => "B",
            Class::C => "C",
        })
    }
}

/// Objects with a symmetry group.
pub trait Symmetric {
    fn symmetry_group(&self) -> SymmetryGroup;

    fn fixed_set(&self) -> FixedSet {
        fixed_set(&self.symmetry_group())
    }

    fn classify(&self) -> Class {
        self.fixed_set().class()
    }
}

impl Symmetric for Multiset {
    fn symmetry_group(&self) -> SymmetryGroup {
        symmetry_group_multiset(self)
    }
}

impl Symmetric for LabeledMultiset {
    fn symmetry_group(&self) -> SymmetryGroup {
        symmetry_group_labeled(self)
    }
}

impl Symmetric for Polygon {
    fn symmetry_group(&self) -> SymmetryGroup {
        symmetry_group_polygon(self)
    }
}

pub fn classify<S: Symmetric + ?Sized>(object: &S) -> Class {
    object.classify()
}

/// Whether some nontrivial rotation maps the object to itself, with the
/// maximal rotation order. With `about`, only rotations about that point
/// count. The continuous group counts as symmetric with order 0.
pub fn is_rotationally_symmetric<S: Symmetric + ?Sized>(
    object: &S,
    about: Option<&Point>,
) -> (bool, usize) {
    let g = object.symmetry_group();
    if about.is_some_and(|p| *p != g.center) {
        return (false, 1);
    }
    if g.continuous {
        return (true, 0);
    }
    (g.rotation_order >= 2, g.rotation_order)
}

pub fn describe_line(l: &Line) -> String {
    format!(
        "({}, {}) + t({}, {})",
        format_scalar(&l.point.x),
        format_scalar(&l.point.y),
        format_scalar(&l.direction.x),
        format_scalar(&l.direction.y)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{int, ratio};

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    fn ms(v: &[(i64, i64)]) -> Multiset {
        Multiset::new(pts(v)).unwrap()
    }

    #[test]
    fn isosceles_has_one_axis() {
        let g = symmetry_group_multiset(&ms(&[(1, 0), (-1, 0), (0, 2)]));
        assert_eq!(g.rotation_order, 1);
        assert_eq!(g.axes.len(), 1);
        assert!(g.axes[0].contains(&Point::from_ints(0, 5)));
        assert_eq!(g.center, Point::new(int(0), ratio(2, 3)));
        assert_eq!(
            fixed_set(&g),
            FixedSet::Line(Line::new(Point::new(int(0), ratio(2, 3)), Point::from_ints(0, 1)))
        );
    }

    #[test]
    fn scalene_is_trivial() {
        let m = ms(&[(0, 0), (4, 0), (1, 2)]);
        assert!(m.symmetry_group().is_trivial());
        assert_eq!(m.classify(), Class::C);
        assert_eq!(m.fixed_set(), FixedSet::Plane);
    }

    #[test]
    fn square_and_collinear() {
        let sq = ms(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let g = sq.symmetry_group();
        assert_eq!((g.rotation_order, g.axes.len()), (4, 4));
        assert_eq!(fixed_set(&g), FixedSet::SinglePoint(Point::from_ints(1, 1)));
        let line = ms(&[(0, 0), (1, 0), (3, 0)]);
        let g = line.symmetry_group();
        assert_eq!((g.rotation_order, g.axes.len()), (1, 1));
        let sym = ms(&[(0, 0), (1, 0), (2, 0)]);
        let g = sym.symmetry_group();
        assert_eq!((g.rotation_order, g.axes.len()), (2, 2));
    }

    #[test]
    fn repeated_point_is_continuous() {
        let m = ms(&[(3, 1), (3, 1)]);
        let g = m.symmetry_group();
        assert!(g.continuous);
        assert_eq!(fixed_set(&g), FixedSet::SinglePoint(Point::from_ints(3, 1)));
        assert_eq!(m.classify(), Class::A);
    }

    #[test]
    fn labeled_square() {
        let sq = pts(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        let all = LabeledMultiset::new(sq.clone(), vec![5; 4]).unwrap();
        let g = all.symmetry_group();
        assert_eq!((g.rotation_order, g.axes.len()), (4, 4));
        let adj = LabeledMultiset::new(sq.clone(), vec![1, 1, 2, 2]).unwrap();
        let g = adj.symmetry_group();
        assert_eq!((g.rotation_order, g.axes.len()), (1, 1));
        let alt = LabeledMultiset::new(sq, vec![1, 2, 1, 2]).unwrap();
        let g = alt.symmetry_group();
        assert_eq!((g.rotation_order, g.axes.len()), (2, 2));
    }

    #[test]
    fn polygon_groups() {
        let convex = Polygon::new(pts(&[(1, 0), (0, 1), (-1, 0), (0, -1)])).unwrap();
        let g = convex.symmetry_group();
        assert_eq!((g.rotation_order, g.axes.len()), (4, 4));
        let bowtie = Polygon::new(pts(&[(1, 0), (-1, 0), (0, 1), (0, -1)])).unwrap();
        let g = bowtie.symmetry_group();
        assert_eq!(g.rotation_order, 2);
        assert!(g.axes.len() <= 2);
        assert_eq!(convex.classify(), Class::A);
    }

    #[test]
    fn polygon_equality_is_dihedral() {
        let a = Polygon::new(pts(&[(0, 0), (1, 0), (1, 1), (0, 2)])).unwrap();
        assert_eq!(a, a.relabeled(2, false));
        assert_eq!(a, a.relabeled(1, true));
        let b = Polygon::new(pts(&[(0, 0), (1, 1), (1, 0), (0, 2)])).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn rotational_symmetry_queries() {
        let pair = ms(&[(1, 0), (-1, 0)]);
        assert_eq!(is_rotationally_symmetric(&pair, Some(&Point::origin())), (true, 2));
        assert_eq!(is_rotationally_symmetric(&pair, Some(&Point::from_ints(1, 0))), (false, 1));
        let three = ms(&[(1, 0), (0, 1), (-1, 0)]);
        assert!(!is_rotationally_symmetric(&three, Some(&Point::origin())).0);
    }

    #[test]
    fn conjugation() {
        let m = ms(&[(1, 0), (-1, 0), (0, 2)]);
        let t = Similarity::direct(ratio(3, 5), ratio(4, 5), Point::from_ints(2, -1));
        assert_eq!(m.transform(&t).symmetry_group(), m.symmetry_group().transform(&t));
    }

    #[test]
    fn fixed_set_is_pointwise_fixed() {
        let m = ms(&[(1, 0), (-1, 0), (0, 2)]);
        let g = m.symmetry_group();
        let fs = fixed_set(&g);
        for k in -3..4 {
            let x = fs.sample(&ratio(k, 3), &int(0));
            for e in &g.elements {
                assert_eq!(e.apply(&x), x);
            }
        }
    }
}
