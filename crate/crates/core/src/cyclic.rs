//! Centers of finite point sets on a circle.
//!
//! Points are stored by angular position (turns) about the circle center
//! `O`. The constructions here are:
//!
//! * [`phi`]: maps a rotationally symmetric set of maximal order `k` to a
//!   regular `k`-gon on the same circle.
//! * [`a_center`]: a circle point for sets with no subset that is
//!   rotationally symmetric about `O`.
//! * [`b_center`]: `O` exactly when the set is rotationally symmetric,
//!   otherwise a point of the circle.
//! * [`b_center_labeled`]: the same for sets whose points carry labels.
//!
//! All of them commute with plane similarities.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;

use crate::angle::{angle_of, arc_midpoint, ccw_arc_length, Angle, ArcMode, DEFAULT_ANGLE_TOL};
use crate::error::{Error, Result};
use crate::geom::{circumcircle, Circle, Point, Similarity};
use crate::real::Real;
use crate::value::CenterValue;

#[derive(Clone, Copy, Debug)]
pub struct CyclicPoint {
    pub theta: Angle,
    pub label: u64,
    /// Index of the input point this one was selected from; constructed
    /// points (midpoints) have none.
    pub source: Option<usize>,
}

impl CyclicPoint {
    pub fn new(theta: Angle) -> CyclicPoint {
        CyclicPoint {
            theta,
            label: 0,
            source: None,
        }
    }

    pub fn labeled(theta: Angle, label: u64) -> CyclicPoint {
        CyclicPoint {
            theta,
            label,
            source: None,
        }
    }
}

/// Output of [`b_center`] and [`b_center_labeled`].
#[derive(Clone, Copy, Debug)]
pub enum CyclicCenter {
    /// The circle center `O`.
    Center,
    OnCircle(CyclicPoint),
}

impl CyclicCenter {
    pub fn is_center(&self) -> bool {
        matches!(self, CyclicCenter::Center)
    }

    pub fn angle(&self) -> Option<Angle> {
        match self {
            CyclicCenter::Center => None,
            CyclicCenter::OnCircle(p) => Some(p.theta),
        }
    }
}

/// A set of distinct points on one circle, sorted by angle.
#[derive(Clone, Debug)]
pub struct CyclicConfiguration {
    circle: Circle,
    points: Vec<CyclicPoint>,
    tol: f64,
    anchors: Arc<[Option<Point>]>,
}

impl CyclicConfiguration {
    pub fn new(circle: Circle, points: Vec<CyclicPoint>, tol: f64) -> Result<CyclicConfiguration> {
        Self::build(circle, points, tol, Arc::from(Vec::new()))
    }

    fn build(
        circle: Circle,
        mut points: Vec<CyclicPoint>,
        tol: f64,
        anchors: Arc<[Option<Point>]>,
    ) -> Result<CyclicConfiguration> {
        if points.is_empty() {
            return Err(Error::Empty);
        }
        points.sort_by(|a, b| a.theta.total_cmp(&b.theta));
        let n = points.len();
        if n >= 2 {
            for i in 0..n {
                let j = (i + 1) % n;
                if points[i].theta.eq_tol(&points[j].theta, tol) {
                    return Err(Error::DuplicateAngle);
                }
            }
        }
        Ok(CyclicConfiguration {
            circle,
            points,
            tol,
            anchors,
        })
    }

    /// Unlabeled points at the given angles.
    pub fn from_angles(circle: Circle, angles: &[Angle]) -> Result<CyclicConfiguration> {
        let pts = angles.iter().map(|a| CyclicPoint::new(*a)).collect();
        Self::new(circle, pts, DEFAULT_ANGLE_TOL)
    }

    /// Points on the unit circle at rational turns `n/d`.
    pub fn unit_turns(turns: &[(i64, i64)]) -> Result<CyclicConfiguration> {
        let angles: Vec<Angle> = turns.iter().map(|&(n, d)| Angle::turns_ratio(n, d)).collect();
        Self::from_angles(Circle::unit(), &angles)
    }

    pub fn labeled(circle: Circle, points: &[(Angle, u64)]) -> Result<CyclicConfiguration> {
        let pts = points
            .iter()
            .map(|&(a, l)| CyclicPoint::labeled(a, l))
            .collect();
        Self::new(circle, pts, DEFAULT_ANGLE_TOL)
    }

    /// Points on a circle given by their rational coordinates. Each point
    /// keeps its input index as `source` so that selected points can be
    /// reported exactly.
    pub fn from_points(points: &[Point], labels: Option<&[u64]>) -> Result<CyclicConfiguration> {
        let circle = circumcircle(points)?;
        if points.len() < 2 {
            return Err(Error::Invalid(
                "a cyclic configuration needs at least two points".into(),
            ));
        }
        Self::from_anchored(circle, points.iter().cloned().map(Some).collect(), labels)
    }

    /// Builds a configuration from points known to lie on `circle`; `None`
    /// anchors are points whose Cartesian position is only known by angle.
    pub(crate) fn on_circle(
        circle: Circle,
        points: Vec<CyclicPoint>,
        anchors: Vec<Option<Point>>,
        tol: f64,
    ) -> Result<CyclicConfiguration> {
        Self::build(circle, points, tol, Arc::from(anchors))
    }

    fn from_anchored(
        circle: Circle,
        anchors: Vec<Option<Point>>,
        labels: Option<&[u64]>,
    ) -> Result<CyclicConfiguration> {
        let mut pts = Vec::with_capacity(anchors.len());
        for (i, a) in anchors.iter().enumerate() {
            let p = a.as_ref().expect("anchored point");
            pts.push(CyclicPoint {
                theta: angle_of(&circle.center, p)?,
                label: labels.map_or(0, |l| l[i]),
                source: Some(i),
            });
        }
        Self::build(circle, pts, DEFAULT_ANGLE_TOL, Arc::from(anchors))
    }

    pub fn with_tol(mut self, tol: f64) -> CyclicConfiguration {
        self.tol = tol;
        self
    }

    pub fn circle(&self) -> &Circle {
        &self.circle
    }

    pub fn points(&self) -> &[CyclicPoint] {
        &self.points
    }

    pub fn angles(&self) -> Vec<Angle> {
        self.points.iter().map(|p| p.theta).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn is_labeled(&self) -> bool {
        self.points.iter().any(|p| p.label != self.points[0].label)
    }

    /// Same circle, anchors and tolerance, new points.
    pub fn with_points(&self, points: Vec<CyclicPoint>) -> Result<CyclicConfiguration> {
        Self::build(self.circle.clone(), points, self.tol, self.anchors.clone())
    }

    pub fn subset(&self, idx: &[usize]) -> CyclicConfiguration {
        self.with_points(idx.iter().map(|&i| self.points[i]).collect())
            .expect("subset of a valid configuration")
    }

    /// `gaps()[i]` is the counterclockwise arc from point `i` to point `i + 1`.
    pub fn gaps(&self) -> Vec<Angle> {
        let n = self.len();
        (0..n)
            .map(|i| ccw_arc_length(self.points[i].theta, self.points[(i + 1) % n].theta))
            .collect()
    }

    pub fn position_of(&self, a: &Angle) -> Option<usize> {
        self.points.iter().position(|p| p.theta.eq_tol(a, self.tol))
    }

    /// Maximal order of a rotation about `O` mapping the set to itself.
    pub fn rotation_order(&self) -> usize {
        self.order_by(false)
    }

    /// Same as [`rotation_order`](Self::rotation_order) but rotations must also
    /// preserve labels.
    pub fn labeled_rotation_order(&self) -> usize {
        self.order_by(true)
    }

    pub fn is_rotationally_symmetric(&self) -> bool {
        self.rotation_order() >= 2
    }

    fn order_by(&self, labels: bool) -> usize {
        let n = self.len();
        if n < 2 {
            return 1;
        }
        let gaps = self.gaps();
        for shift in (1..n).filter(|s| n.is_multiple_of(*s)) {
            let periodic = (0..n).all(|i| {
                let j = (i + shift) % n;
                gaps[i].cmp_tol(&gaps[j], self.tol) == Ordering::Equal
                    && (!labels || self.points[i].label == self.points[j].label)
            });
            if periodic {
                return n / shift;
            }
        }
        1
    }

    /// Image of the configuration under a similarity.
    pub fn transform(&self, t: &Similarity) -> CyclicConfiguration {
        let phi = crate::angle::direction_angle(&t.rotation_vector()).expect("nonzero");
        let reflect = t.is_reflecting();
        let points = self
            .points
            .iter()
            .map(|p| CyclicPoint {
                theta: if reflect { phi.sub(p.theta) } else { phi.add(p.theta) },
                ..*p
            })
            .collect();
        let anchors: Vec<Option<Point>> = self
            .anchors
            .iter()
            .map(|a| a.as_ref().map(|p| t.apply(p)))
            .collect();
        Self::build(self.circle.transform(t), points, self.tol, Arc::from(anchors))
            .expect("similarity preserves distinctness")
    }

    /// Cartesian position of the circle point at angle `a`.
    pub fn locate(&self, a: &Angle) -> [Real; 2] {
        let [c, s] = a.unit_vector();
        let r = self.circle.radius();
        let [cx, cy] = self.circle.center.to_real();
        [cx + r * c, cy + r * s]
    }

    pub fn point_value(&self, p: &CyclicPoint) -> CenterValue {
        if let Some(Some(anchor)) = p.source.and_then(|i| self.anchors.get(i).cloned()) {
            return CenterValue::exact(anchor);
        }
        if let (Some(r), Some(t)) = (self.circle.exact_radius(), p.theta.exact()) {
            let q = t * crate::angle::Turns::from_integer(4);
            if q.is_integer() {
                let (dx, dy) = match q.to_integer() {
                    0 => (1, 0),
                    1 => (0, 1),
                    2 => (-1, 0),
                    _ => (0, -1),
                };
                let d = Point::from_ints(dx, dy).scale(&r);
                return CenterValue::exact(&self.circle.center + &d);
            }
        }
        CenterValue::approx(self.locate(&p.theta))
    }

    pub fn center_value(&self, c: &CyclicCenter) -> CenterValue {
        match c {
            CyclicCenter::Center => CenterValue::exact(self.circle.center.clone()),
            CyclicCenter::OnCircle(p) => self.point_value(p),
        }
    }
}

/// Pairs of consecutive points in angular order, wrapping around. Two
/// points give a single pair.
pub fn circle_adjacency(config: &CyclicConfiguration) -> Result<Vec<(usize, usize)>> {
    let n = config.len();
    match n {
        0 | 1 => Err(Error::Invalid("adjacency needs at least two points".into())),
        2 => Ok(vec![(0, 1)]),
        _ => Ok((0..n).map(|i| (i, (i + 1) % n)).collect()),
    }
}

/// `classes[k]` holds the points whose whole orbit under the rotation group
/// of order `k` about `O` stays inside the set; `infinity` holds the rest.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrbitPartition {
    pub classes: BTreeMap<usize, Vec<usize>>,
    pub infinity: Vec<usize>,
}

impl OrbitPartition {
    pub fn class(&self, k: usize) -> &[usize] {
        self.classes.get(&k).map_or(&[], |v| v.as_slice())
    }

    pub fn has_symmetric_subset(&self) -> bool {
        self.classes.values().any(|v| !v.is_empty())
    }
}

pub fn orbit_partition(config: &CyclicConfiguration) -> OrbitPartition {
    let n = config.len();
    let mut part = OrbitPartition::default();
    let mut covered = vec![false; n];
    for k in 2..=n.max(1) {
        if k < 2 {
            continue;
        }
        let steps: Vec<Angle> = (1..k as i64).map(|j| Angle::turns_ratio(j, k as i64)).collect();
        let members: Vec<usize> = (0..n)
            .filter(|&i| {
                let theta = config.points[i].theta;
                steps
                    .iter()
                    .all(|s| config.position_of(&theta.add(*s)).is_some())
            })
            .collect();
        for &i in &members {
            covered[i] = true;
        }
        part.classes.insert(k, members);
    }
    part.infinity = (0..n).filter(|&i| !covered[i]).collect();
    part
}

fn lex_cmp(a: &[Angle], b: &[Angle], tol: f64) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp_tol(y, tol) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Indices whose sequence is lexicographically minimal.
fn argmin_sequences(seqs: &[Vec<Angle>], tol: f64) -> Vec<usize> {
    let mut best = 0;
    for i in 1..seqs.len() {
        if lex_cmp(&seqs[i], &seqs[best], tol) == Ordering::Less {
            best = i;
        }
    }
    (0..seqs.len())
        .filter(|&i| lex_cmp(&seqs[i], &seqs[best], tol) == Ordering::Equal)
        .collect()
}

/// Maps a set with maximal rotation order `k >= 2` to a regular `k`-gon on
/// the same circle (an antipodal pair when `k = 2`).
pub fn phi(config: &CyclicConfiguration, k: usize) -> Result<CyclicConfiguration> {
    let order = config.rotation_order();
    if k < 2 || order != k {
        return Err(Error::Precondition(format!(
            "phi needs a set whose maximal rotation order is {k}; this set has order {order}"
        )));
    }
    let n = config.len();
    if n == k {
        return Ok(config.clone());
    }
    let tol = config.tol;
    let gaps = config.gaps();
    let forward: Vec<Vec<Angle>> = (0..n)
        .map(|i| (0..n).map(|s| gaps[(i + s) % n]).collect())
        .collect();
    let backward: Vec<Vec<Angle>> = (0..n)
        .map(|i| (0..n).map(|s| gaps[(i + 2 * n - 1 - s) % n]).collect())
        .collect();
    let q_plus = argmin_sequences(&forward, tol);
    let q_minus = argmin_sequences(&backward, tol);
    if q_plus.len() != k || q_minus.len() != k {
        return Err(Error::contract(
            "phi: minimal gap sequences",
            format!(
                "expected {k} minimal starts, found {} forward and {} backward",
                q_plus.len(),
                q_minus.len()
            ),
        ));
    }
    if q_plus == q_minus {
        return Err(Error::contract(
            "phi: minimal gap sequences",
            "forward and backward minimal sets coincide",
        ));
    }
    let pts = &config.points;
    let mut out = Vec::with_capacity(k);
    for &i in &q_plus {
        let mut j = (i + 1) % n;
        while !q_minus.contains(&j) {
            if q_plus.contains(&j) {
                return Err(Error::contract(
                    "phi: arc endpoints",
                    "two forward-minimal points are adjacent in their union",
                ));
            }
            j = (j + 1) % n;
        }
        let m = arc_midpoint(pts[i].theta, pts[j].theta, ArcMode::CcwFromA, tol)?;
        out.push(CyclicPoint::new(m));
    }
    config.with_points(out)
}

fn assert_no_symmetric_subset(config: &CyclicConfiguration, level: usize) -> Result<()> {
    if orbit_partition(config).has_symmetric_subset() {
        return Err(Error::Precondition(format!(
            "a_center input at recursion level {level} contains a subset rotationally symmetric about the circle center"
        )));
    }
    Ok(())
}

/// Circle point of a set with no subset that is rotationally symmetric
/// about the circle center.
///
/// Repeatedly takes the adjacent pairs spanning the largest empty arc: when
/// they cover the whole set they are replaced by the midpoints of those
/// arcs, otherwise they are removed. Ends at one point, or at the midpoint
/// of the shorter arc between two.
pub fn a_center(config: &CyclicConfiguration) -> Result<CyclicPoint> {
    let tol = config.tol;
    let mut current = config.clone();
    let limit = config.len() + 1;
    for level in 0..=limit {
        assert_no_symmetric_subset(&current, level)?;
        let pts = current.points.clone();
        let n = pts.len();
        match n {
            1 => return Ok(pts[0]),
            2 => {
                let m = arc_midpoint(pts[0].theta, pts[1].theta, ArcMode::Smallest, tol)?;
                return Ok(CyclicPoint::new(m));
            }
            _ => {}
        }
        let gaps = current.gaps();
        let mut max = gaps[0];
        for g in &gaps[1..] {
            if g.cmp_tol(&max, tol) == Ordering::Greater {
                max = *g;
            }
        }
        let widest: Vec<usize> = (0..n)
            .filter(|&i| gaps[i].cmp_tol(&max, tol) == Ordering::Equal)
            .collect();
        let mut covered = vec![false; n];
        for &i in &widest {
            covered[i] = true;
            covered[(i + 1) % n] = true;
        }
        let next: Vec<CyclicPoint> = if covered.iter().all(|&c| c) {
            let mut mids = Vec::with_capacity(widest.len());
            for &i in &widest {
                let m = arc_midpoint(pts[i].theta, pts[(i + 1) % n].theta, ArcMode::CcwFromA, tol)?;
                mids.push(CyclicPoint::new(m));
            }
            mids
        } else {
            (0..n).filter(|&i| !covered[i]).map(|i| pts[i]).collect()
        };
        if next.len() >= n {
            return Err(Error::contract(
                "a_center: termination",
                format!("pass at level {level} did not shrink the set"),
            ));
        }
        current = current.with_points(next)?;
    }
    Err(Error::contract("a_center: termination", "recursion limit reached"))
}

/// Center of a cyclic set: `O` exactly when the set is rotationally
/// symmetric, otherwise a point of the circle.
pub fn b_center(config: &CyclicConfiguration) -> Result<CyclicCenter> {
    if config.is_rotationally_symmetric() {
        return Ok(CyclicCenter::Center);
    }
    let part = orbit_partition(config);
    if !part.infinity.is_empty() {
        // The remainder never contains a symmetric subset: such a subset
        // would put its points in one of the orbit classes.
        let rest = config.subset(&part.infinity);
        return a_center(&rest).map(CyclicCenter::OnCircle);
    }
    let nonempty: Vec<usize> = part
        .classes
        .iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|(k, _)| *k)
        .collect();
    let mut best: Option<(usize, usize)> = None;
    for &i in &nonempty {
        for &j in &nonempty {
            if i > j && i.gcd(&j) == 1 && best.is_none_or(|b| (i, j) > b) {
                best = Some((i, j));
            }
        }
    }
    let (i, j) = best.ok_or_else(|| {
        Error::contract(
            "b_center: coprime orbit classes",
            "no pair of nonempty orbit classes with coprime orders",
        )
    })?;
    let qi = config.subset(part.class(i));
    let qj = config.subset(part.class(j));
    let ri = phi(&qi, qi.rotation_order())?;
    let rj = phi(&qj, qj.rotation_order())?;
    let mut union = ri.angles();
    union.extend(rj.angles());
    closest_pair_center(union, config.tol).map(|a| CyclicCenter::OnCircle(CyclicPoint::new(a)))
}

/// Final steps shared by [`b_center`] and [`b_center_labeled`]: given the
/// union of two regular polygons with coprime vertex counts, take the
/// adjacent pairs with the smallest angle. One pair gives the midpoint of
/// its arc; two pairs give the midpoint of the shorter arc between the two
/// arc midpoints.
fn closest_pair_center(mut angles: Vec<Angle>, tol: f64) -> Result<Angle> {
    angles.sort_by(|a, b| a.total_cmp(b));
    angles.dedup_by(|a, b| a.eq_tol(b, tol));
    if angles.len() > 1 && angles[0].eq_tol(&angles[angles.len() - 1], tol) {
        angles.pop();
    }
    let n = angles.len();
    if n < 3 {
        return Err(Error::contract(
            "b_center: closest adjacent pairs",
            format!("union of regular polygons has only {n} points"),
        ));
    }
    let gaps: Vec<Angle> = (0..n)
        .map(|i| ccw_arc_length(angles[i], angles[(i + 1) % n]))
        .collect();
    let mut min = gaps[0];
    for g in &gaps[1..] {
        if g.cmp_tol(&min, tol) == Ordering::Less {
            min = *g;
        }
    }
    let closest: Vec<usize> = (0..n)
        .filter(|&i| gaps[i].cmp_tol(&min, tol) == Ordering::Equal)
        .collect();
    match closest.as_slice() {
        [i] => arc_midpoint(angles[*i], angles[(i + 1) % n], ArcMode::Smallest, tol).map_err(|_| {
            Error::contract("b_center: closest adjacent pairs", "closest pair is antipodal")
        }),
        [i, j] => {
            let m1 = arc_midpoint(angles[*i], angles[(i + 1) % n], ArcMode::CcwFromA, tol)?;
            let m2 = arc_midpoint(angles[*j], angles[(j + 1) % n], ArcMode::CcwFromA, tol)?;
            arc_midpoint(m1, m2, ArcMode::Smallest, tol).map_err(|_| {
                Error::contract(
                    "b_center: arc midpoints of the closest pairs",
                    "the two arc midpoints are antipodal",
                )
            })
        }
        more => Err(Error::contract(
            "b_center: closest adjacent pairs",
            format!("{} adjacent pairs share the minimal angle", more.len()),
        )),
    }
}

/// [`b_center`] for labeled sets: `O` exactly when some rotation about `O`
/// preserves both the set and its labels.
pub fn b_center_labeled(config: &CyclicConfiguration) -> Result<CyclicCenter> {
    let mut labels: Vec<u64> = config.points.iter().map(|p| p.label).collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() == 1 {
        return b_center(config);
    }
    // Classes in increasing label order; only the order of labels matters.
    let classes: Vec<CyclicConfiguration> = labels
        .iter()
        .map(|l| {
            let idx: Vec<usize> = (0..config.len())
                .filter(|&i| config.points[i].label == *l)
                .collect();
            config.subset(&idx)
        })
        .collect();
    if let Some(class) = classes.iter().rev().find(|c| !c.is_rotationally_symmetric()) {
        return b_center(class);
    }
    let orders: Vec<usize> = classes.iter().map(|c| c.rotation_order()).collect();
    if orders.iter().fold(0, |g, &d| g.gcd(&d)) > 1 {
        return Ok(CyclicCenter::Center);
    }
    let k = classes.len();
    let mut best: Option<(usize, usize)> = None;
    for i in 0..k {
        for j in 0..i {
            if orders[i].gcd(&orders[j]) == 1 && best.is_none_or(|b| (i, j) > b) {
                best = Some((i, j));
            }
        }
    }
    let tol = config.tol;
    if let Some((i, j)) = best {
        let mut union = phi(&classes[i], orders[i])?.angles();
        union.extend(phi(&classes[j], orders[j])?.angles());
        return closest_pair_center(union, tol)
            .map(|a| CyclicCenter::OnCircle(CyclicPoint::new(a)));
    }
    // No two class orders are coprime although all of them together are
    // (e.g. 6, 10, 15). Fold the regular polygons from the highest label
    // down, shrinking the running polygon to the common rotation order,
    // until a coprime pair appears.
    let mut acc = phi(&classes[k - 1], orders[k - 1])?.angles();
    let mut acc_order = orders[k - 1];
    for i in (0..k - 1).rev() {
        let other = phi(&classes[i], orders[i])?.angles();
        let g = acc_order.gcd(&orders[i]);
        if g == 1 {
            acc.extend(other);
            return closest_pair_center(acc, tol)
                .map(|a| CyclicCenter::OnCircle(CyclicPoint::new(a)));
        }
        if g < acc_order {
            acc = common_subpolygon(&acc, &other, g, tol)?;
            acc_order = g;
        }
    }
    Err(Error::contract(
        "b_center_labeled: coprime reduction",
        "label classes never reached coprime rotation orders",
    ))
}

/// Regular `g`-gon determined equivariantly by two regular polygons whose
/// union, with the polygons told apart, has rotation order `g`.
///
/// `base` points closest to `other` counterclockwise and clockwise form two
/// regular `g`-gons; if they coincide that is the answer, otherwise the
/// midpoints of the arcs running counterclockwise from the first to the
/// second are.
fn common_subpolygon(base: &[Angle], other: &[Angle], g: usize, tol: f64) -> Result<Vec<Angle>> {
    let min_arc = |p: Angle, ccw: bool| {
        other
            .iter()
            .map(|q| if ccw { ccw_arc_length(p, *q) } else { ccw_arc_length(*q, p) })
            .min_by(|a, b| a.total_cmp(b))
            .expect("nonempty polygon")
    };
    let pick = |ccw: bool| -> Vec<usize> {
        let d: Vec<Angle> = base.iter().map(|p| min_arc(*p, ccw)).collect();
        let m = *d.iter().min_by(|a, b| a.total_cmp(b)).expect("nonempty");
        (0..base.len())
            .filter(|&i| d[i].cmp_tol(&m, tol) == Ordering::Equal)
            .collect()
    };
    let plus = pick(true);
    let minus = pick(false);
    let out: Vec<Angle> = if plus == minus {
        plus.iter().map(|&i| base[i]).collect()
    } else {
        let n = base.len();
        let mut mids = Vec::new();
        for &i in &plus {
            let mut j = (i + 1) % n;
            while !minus.contains(&j) {
                if plus.contains(&j) || j == i {
                    return Err(Error::contract(
                        "b_center_labeled: coprime reduction",
                        "closest-point classes do not interleave",
                    ));
                }
                j = (j + 1) % n;
            }
            mids.push(arc_midpoint(base[i], base[j], ArcMode::CcwFromA, tol)?);
        }
        mids
    };
    if out.len() != g {
        return Err(Error::contract(
            "b_center_labeled: coprime reduction",
            format!("expected a regular {g}-gon, got {} points", out.len()),
        ));
    }
    let mut out = out;
    out.sort_by(|a, b| a.total_cmp(b));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::exact_pair;

    fn cfg(turns: &[(i64, i64)]) -> CyclicConfiguration {
        CyclicConfiguration::unit_turns(turns).unwrap()
    }

    fn on_circle(c: CyclicCenter) -> Angle {
        c.angle().expect("expected a circle point")
    }

    #[test]
    fn adjacency_examples() {
        let c = cfg(&[(0, 1), (1, 4), (1, 2)]);
        assert_eq!(circle_adjacency(&c).unwrap(), vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(circle_adjacency(&cfg(&[(0, 1), (1, 2)])).unwrap(), vec![(0, 1)]);
        let sq = cfg(&[(0, 1), (1, 4), (1, 2), (3, 4)]);
        let pairs = circle_adjacency(&sq).unwrap();
        assert_eq!(pairs.len(), 4);
        for (i, j) in pairs {
            let g = ccw_arc_length(sq.points()[i].theta, sq.points()[j].theta);
            assert_eq!(exact_pair(&g), Some((1, 4)));
        }
        assert!(circle_adjacency(&cfg(&[(1, 3)])).is_err());
    }

    #[test]
    fn duplicate_angles_rejected() {
        assert_eq!(
            CyclicConfiguration::unit_turns(&[(1, 4), (2, 8)]).unwrap_err(),
            Error::DuplicateAngle
        );
    }

    #[test]
    fn rotation_orders() {
        assert_eq!(cfg(&[(0, 1), (1, 2)]).rotation_order(), 2);
        assert_eq!(cfg(&[(0, 1), (1, 4), (1, 2)]).rotation_order(), 1);
        let hex: Vec<(i64, i64)> = (0..6).map(|i| (i, 6)).collect();
        assert_eq!(cfg(&hex).rotation_order(), 6);
        assert_eq!(cfg(&[(1, 4)]).rotation_order(), 1);
    }

    #[test]
    fn orbit_partition_examples() {
        let part = orbit_partition(&cfg(&[(0, 1), (1, 4), (1, 2)]));
        assert_eq!(part.class(2), &[0, 2]);
        assert!(part.class(3).is_empty());
        assert_eq!(part.infinity, vec![1]);

        let pent: Vec<(i64, i64)> = (0..5).map(|i| (i, 5)).collect();
        let part = orbit_partition(&cfg(&pent));
        assert_eq!(part.class(5), &[0, 1, 2, 3, 4]);
        assert!(part.infinity.is_empty());

        let generic = cfg(&[(0, 1), (1, 10), (3, 10), (7, 17), (9, 13)]);
        let part = orbit_partition(&generic);
        assert_eq!(part.infinity.len(), 5);
        assert!(!part.has_symmetric_subset());
    }

    #[test]
    fn phi_examples() {
        let sq = cfg(&[(0, 1), (1, 4), (1, 2), (3, 4)]);
        let out = phi(&sq, 4).unwrap();
        let turns: Vec<_> = out.points().iter().map(|p| exact_pair(&p.theta).unwrap()).collect();
        assert_eq!(turns, vec![(0, 1), (1, 4), (1, 2), (3, 4)]);

        let c = cfg(&[(0, 1), (1, 10), (1, 2), (3, 5)]);
        let out = phi(&c, 2).unwrap();
        let turns: Vec<_> = out.points().iter().map(|p| exact_pair(&p.theta).unwrap()).collect();
        assert_eq!(turns, vec![(1, 20), (11, 20)]);

        // regular hexagon at an irrational phase maps to itself
        let phase = Angle::from_f64(0.123_456_789_01);
        let hex: Vec<Angle> = (0..6).map(|i| phase.add(Angle::turns_ratio(i, 6))).collect();
        let h = CyclicConfiguration::from_angles(Circle::unit(), &hex).unwrap();
        let out = phi(&h, 6).unwrap();
        for (a, b) in out.angles().iter().zip(h.angles()) {
            assert!(a.eq_tol(&b, 1e-12));
        }

        assert!(matches!(phi(&cfg(&[(0, 1), (1, 4), (1, 2)]), 2), Err(Error::Precondition(_))));
        // the order must be the maximal one
        assert!(matches!(phi(&sq, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn phi_output_is_regular() {
        let c = cfg(&[(0, 1), (1, 10), (1, 5), (1, 2), (3, 5), (7, 10)]);
        let out = phi(&c, 2).unwrap();
        assert_eq!(out.len(), 2);
        for g in out.gaps() {
            assert_eq!(exact_pair(&g), Some((1, 2)));
        }
    }

    #[test]
    fn a_center_examples() {
        let p = a_center(&cfg(&[(1, 4)])).unwrap();
        assert_eq!(exact_pair(&p.theta), Some((1, 4)));
        let p = a_center(&cfg(&[(0, 1), (1, 4)])).unwrap();
        assert_eq!(exact_pair(&p.theta), Some((1, 8)));
        let p = a_center(&cfg(&[(0, 1), (1, 4), (2, 5)])).unwrap();
        assert_eq!(exact_pair(&p.theta), Some((1, 4)));
    }

    #[test]
    fn a_center_rejects_symmetric_subsets() {
        let err = a_center(&cfg(&[(0, 1), (1, 4), (1, 2)])).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("level 0")), "{err}");
    }

    #[test]
    fn a_center_midpoint_pass() {
        // gaps 0.3, 0.3, 0.4: one widest pair, removed; singleton remains
        let p = a_center(&cfg(&[(0, 1), (3, 10), (3, 5)])).unwrap();
        assert_eq!(exact_pair(&p.theta), Some((3, 10)));
        // widest pairs cover everything: gaps 3/8, 3/8, 1/4 -> midpoints 3/16, 9/16
        // then the two midpoints: gap 3/8 -> midpoint 3/8
        let p = a_center(&cfg(&[(0, 1), (3, 8), (3, 4)])).unwrap();
        assert_eq!(exact_pair(&p.theta), Some((3, 8)));
    }

    #[test]
    fn b_center_examples() {
        assert!(b_center(&cfg(&[(0, 1), (1, 3), (2, 3)])).unwrap().is_center());
        let b = b_center(&cfg(&[(0, 1), (1, 4), (1, 2)])).unwrap();
        assert_eq!(exact_pair(&on_circle(b)), Some((1, 4)));
        let b = b_center(&cfg(&[(0, 1), (1, 3), (2, 3), (1, 12), (7, 12)])).unwrap();
        assert_eq!(exact_pair(&on_circle(b)), Some((5, 6)));
    }

    #[test]
    fn b_center_labeled_examples() {
        let c = Circle::unit();
        let t = Angle::turns_ratio;
        // all labels equal: same as the unlabeled center
        let lab = CyclicConfiguration::labeled(c.clone(), &[(t(0, 1), 3), (t(1, 4), 3), (t(1, 2), 3)]).unwrap();
        let b = b_center_labeled(&lab).unwrap();
        assert_eq!(exact_pair(&on_circle(b)), Some((1, 4)));
        // label-1 class is an antipodal pair, the label-2 singleton decides
        let lab = CyclicConfiguration::labeled(c.clone(), &[(t(1, 10), 1), (t(3, 5), 1), (t(1, 4), 2)]).unwrap();
        let b = b_center_labeled(&lab).unwrap();
        assert_eq!(exact_pair(&on_circle(b)), Some((1, 4)));
        // alternating square: the half turn preserves labels
        let lab = CyclicConfiguration::labeled(
            c.clone(),
            &[(t(0, 1), 1), (t(1, 4), 2), (t(1, 2), 1), (t(3, 4), 2)],
        )
        .unwrap();
        assert!(b_center_labeled(&lab).unwrap().is_center());
        // square with labels (1,1,2,2): no label-preserving rotation
        let lab = CyclicConfiguration::labeled(
            c,
            &[(t(0, 1), 1), (t(1, 4), 1), (t(1, 2), 2), (t(3, 4), 2)],
        )
        .unwrap();
        let b = b_center_labeled(&lab).unwrap();
        assert!(!b.is_center());
    }

    #[test]
    fn b_center_labeled_pairwise_noncoprime_orders() {
        // regular 6-, 10- and 15-gons with distinct labels: no two orders are
        // coprime but the labeled set has no rotation.
        let c = Circle::unit();
        let mut pts = Vec::new();
        for (label, (k, phase)) in [(6i64, (1i64, 97i64)), (10, (3, 101)), (15, (5, 103))].into_iter().enumerate() {
            for i in 0..k {
                let a = Angle::turns_ratio(phase.0, phase.1).add(Angle::turns_ratio(i, k));
                pts.push((a, label as u64));
            }
        }
        let lab = CyclicConfiguration::labeled(c, &pts).unwrap();
        assert_eq!(lab.labeled_rotation_order(), 1);
        let b = b_center_labeled(&lab).unwrap();
        assert!(!b.is_center());
        // and it is still equivariant under a quarter turn
        let rot = Similarity::direct(crate::geom::int(0), crate::geom::int(1), Point::origin());
        let b2 = b_center_labeled(&lab.transform(&rot)).unwrap();
        let expect = on_circle(b).add(Angle::turns_ratio(1, 4));
        assert!(on_circle(b2).eq_tol(&expect, 1e-12));
    }

    #[test]
    fn transform_reflects_order() {
        let c = cfg(&[(0, 1), (1, 10), (1, 2)]);
        let refl = Similarity::indirect(crate::geom::int(1), crate::geom::int(0), Point::origin());
        let r = c.transform(&refl);
        let turns: Vec<_> = r.points().iter().map(|p| exact_pair(&p.theta).unwrap()).collect();
        assert_eq!(turns, vec![(0, 1), (1, 2), (9, 10)]);
    }
}
