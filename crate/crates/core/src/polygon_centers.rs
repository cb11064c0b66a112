//! Centers of polygons: `x_center_polygon` equals the centroid exactly when
//! the polygon has a rotational symmetry; centroid, `x_center_polygon` and
//! `y_center_polygon` are affinely independent exactly when its symmetry
//! group is trivial.
//!
//! When the vertex multiset alone already has the right symmetry type the
//! multiset centers are used. Otherwise the vertices are symmetric but the
//! adjacency breaks the symmetry, and the centers are chosen by comparing
//! codes of the two closed chains leaving each candidate vertex.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::angle::{angle_of, ccw_arc_length, cmp_direction, Angle, ArcMode, DEFAULT_ANGLE_TOL};
use crate::error::{Error, Result};
use crate::geom::{all_collinear, exact_sqrt, Point, Scalar};
use crate::multiset_centers::{
    affine_coefficients, distance_ranks, distances_to, exact_ranks, side_of, x_center_detail,
    y_center_multiset_tol, Coefficients, XDetail,
};
use crate::real::sqrt_ratio;
use crate::symmetry::{Class, Polygon, Symmetric};
use crate::value::CenterValue;

/// A vertex described by its position about the centroid.
#[derive(Clone, Copy, Debug)]
pub struct PolarVertex {
    /// Index of its circle about the centroid, 1 for the outermost.
    pub ring: usize,
    /// Index of its ray from the centroid; none at the centroid.
    pub ray: Option<usize>,
    pub angle: Option<Angle>,
}

/// A polygon in polar form about its centroid. Built from rational
/// vertices, or directly from rings and angles (which allows vertices at
/// irrational positions such as a regular pentagon).
#[derive(Clone, Debug)]
pub struct PolarPolygon {
    pub vertices: Vec<PolarVertex>,
    pub ray_angles: Vec<Angle>,
}

impl PolarPolygon {
    pub fn from_polygon(p: &Polygon) -> Result<PolarPolygon> {
        let c = p.centroid();
        let d: Vec<Point> = p.vertices().iter().map(|v| v - &c).collect();
        let rings = exact_ranks(&d.iter().map(|v| v.norm_sq()).collect::<Vec<_>>());
        let mut reps: Vec<Point> = Vec::new();
        let mut ray_angles = Vec::new();
        let mut vertices = Vec::with_capacity(d.len());
        for (i, v) in d.iter().enumerate() {
            let (ray, angle) = if v.is_zero() {
                (None, None)
            } else {
                let id = match reps.iter().position(|r| cmp_direction(r, v) == Ordering::Equal) {
                    Some(id) => id,
                    None => {
                        reps.push(v.clone());
                        ray_angles.push(angle_of(&c, &p.vertices()[i])?);
                        reps.len() - 1
                    }
                };
                (Some(id), Some(ray_angles[id]))
            };
            vertices.push(PolarVertex {
                ring: rings[i],
                ray,
                angle,
            });
        }
        Ok(PolarPolygon {
            vertices,
            ray_angles,
        })
    }

    /// Vertices given as `(ring, angle)`; `None` marks the centroid.
    pub fn from_polar(entries: &[(usize, Option<Angle>)], tol: f64) -> Result<PolarPolygon> {
        if entries.len() < 3 {
            return Err(Error::Invalid("a polygon needs at least 3 vertices".into()));
        }
        let mut ray_angles: Vec<Angle> = Vec::new();
        let mut vertices = Vec::with_capacity(entries.len());
        for &(ring, angle) in entries {
            let ray = angle.map(|a| match ray_angles.iter().position(|r| r.eq_tol(&a, tol)) {
                Some(id) => id,
                None => {
                    ray_angles.push(a);
                    ray_angles.len() - 1
                }
            });
            vertices.push(PolarVertex { ring, ray, angle });
        }
        Ok(PolarPolygon {
            vertices,
            ray_angles,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Vertex indices of the closed chain of `n + 1` positions starting at
/// `start`, walking forward or backward along the cycle.
pub fn chain(n: usize, start: usize, forward: bool) -> Vec<usize> {
    (0..=n)
        .map(|j| if forward { (start + j) % n } else { (start + n - j % n) % n })
        .collect()
}

/// The two chains from `start`, positive first.
///
/// `r` is the ray from the centroid through the start vertex. Among the
/// other rays, `r+` makes the smallest counterclockwise angle with `r`,
/// `r-` the smallest clockwise one; `V+` and `V-` are the outermost
/// vertices on them. The positive chain reaches `V+` before `V-`.
pub fn chain_orientation(p: &PolarPolygon, start: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = p.len();
    let w = p.vertices[start];
    let w_ray = w
        .ray
        .ok_or_else(|| Error::Invalid("chain start is the centroid".into()))?;
    let theta = p.ray_angles[w_ray];
    let others: Vec<usize> = (0..p.ray_angles.len()).filter(|&r| r != w_ray).collect();
    if others.is_empty() {
        return Err(Error::Invalid("vertices lie on a single ray".into()));
    }
    let pick = |ccw: bool| {
        let arc = |r: usize| {
            if ccw {
                ccw_arc_length(theta, p.ray_angles[r])
            } else {
                ccw_arc_length(p.ray_angles[r], theta)
            }
        };
        let ray = *others
            .iter()
            .min_by(|&&a, &&b| arc(a).total_cmp(&arc(b)))
            .expect("nonempty");
        let ring = p
            .vertices
            .iter()
            .filter(|v| v.ray == Some(ray))
            .map(|v| v.ring)
            .min()
            .expect("ray has a vertex");
        (ray, ring)
    };
    let (plus, minus) = (pick(true), pick(false));
    if plus == minus {
        return Err(Error::contract(
            "chain orientation",
            "nearest rays on both sides coincide",
        ));
    }
    let first_hit = |c: &[usize], target: (usize, usize)| {
        c.iter()
            .position(|&i| p.vertices[i].ray == Some(target.0) && p.vertices[i].ring == target.1)
            .expect("vertex on chain")
    };
    let fwd = chain(n, start, true);
    let bwd = chain(n, start, false);
    let f = first_hit(&fwd, plus) < first_hit(&fwd, minus);
    let b = first_hit(&bwd, plus) < first_hit(&bwd, minus);
    match (f, b) {
        (true, false) => Ok((fwd, bwd)),
        (false, true) => Ok((bwd, fwd)),
        _ => Err(Error::contract(
            "chain orientation",
            "both chains reach the same nearest vertex first",
        )),
    }
}

/// One position of a chain code: the ring of the vertex and the angle to
/// it from the last vertex off the centroid (counterclockwise for the
/// positive chain, clockwise for the negative one; 0 at the centroid).
#[derive(Clone, Copy, Debug)]
pub struct ChainStep {
    pub ring: usize,
    pub alpha: Angle,
}

impl ChainStep {
    fn cmp_tol(&self, o: &ChainStep, tol: f64) -> Ordering {
        self.ring.cmp(&o.ring).then_with(|| self.alpha.cmp_tol(&o.alpha, tol))
    }
}

impl fmt::Display for ChainStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = match self.alpha.exact() {
            Some(r) if r.is_zero() => "0".to_string(),
            Some(r) => format!("{}·2π/{}", r.numer(), r.denom()),
            None => format!("{}·2π", self.alpha.value().to_decimal(12)),
        };
        write!(f, "({},{})", self.ring, a)
    }
}

/// Code of positions `2..=n+1` of a chain.
pub fn chain_code(p: &PolarPolygon, chain: &[usize], positive: bool) -> Vec<ChainStep> {
    let mut last = p.vertices[chain[0]].angle.expect("chain starts off the centroid");
    chain[1..]
        .iter()
        .map(|&i| {
            let v = p.vertices[i];
            let alpha = match v.angle {
                None => Angle::zero(),
                Some(a) => {
                    let alpha = if positive {
                        ccw_arc_length(last, a)
                    } else {
                        ccw_arc_length(a, last)
                    };
                    last = a;
                    alpha
                }
            };
            ChainStep { ring: v.ring, alpha }
        })
        .collect()
}

pub fn format_chain_code(code: &[ChainStep]) -> String {
    let parts: Vec<String> = code.iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(","))
}

/// The same code in TeX notation, `((1,2\frac{2\pi}{5}),...)`.
pub fn format_chain_code_tex(code: &[ChainStep]) -> String {
    let parts: Vec<String> = code
        .iter()
        .map(|s| {
            let a = match s.alpha.exact() {
                Some(r) if r.is_zero() => "0".to_string(),
                Some(r) => format!("{}\\frac{{2\\pi}}{{{}}}", r.numer(), r.denom()),
                None => format!("{}\\cdot 2\\pi", s.alpha.value().to_decimal(12)),
            };
            format!("({},{})", s.ring, a)
        })
        .collect();
    format!("({})", parts.join(","))
}

fn cmp_seq<T>(a: &[T], b: &[T], cmp: &impl Fn(&T, &T) -> Ordering) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match cmp(x, y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Index of the lexicographically least sequence. Ties are allowed only
/// between occurrences of the same point.
fn unique_min<T>(
    seqs: &[(usize, Vec<T>)],
    cmp: impl Fn(&T, &T) -> Ordering,
    same_point: impl Fn(usize, usize) -> bool,
    rule: &'static str,
) -> Result<usize> {
    let mut best = 0;
    for i in 1..seqs.len() {
        if cmp_seq(&seqs[i].1, &seqs[best].1, &cmp) == Ordering::Less {
            best = i;
        }
    }
    for (i, s) in seqs.iter().enumerate() {
        if i != best
            && cmp_seq(&s.1, &seqs[best].1, &cmp) == Ordering::Equal
            && !same_point(s.0, seqs[best].0)
        {
            return Err(Error::contract(
                rule,
                format!("vertices {} and {} share the minimal code", seqs[best].0, s.0),
            ));
        }
    }
    Ok(seqs[best].0)
}

/// Midpoint of the counterclockwise arc from `u` to `v` on the circle
/// about `c` through both, exact when it is rational.
fn ccw_arc_midpoint(c: &Point, u: &Point, v: &Point, tol: f64) -> Result<XDetail> {
    let a = angle_of(c, u)?;
    let b = angle_of(c, v)?;
    let mid = crate::angle::arc_midpoint(a, b, ArcMode::CcwFromA, tol)?;
    let du = u - c;
    let dv = v - c;
    let cross = du.cross(&dv);
    let exact = if cross.is_zero() {
        // opposite points: a quarter turn from u
        Some(c + &du.perp())
    } else {
        let s = &du + &dv;
        exact_sqrt(&(du.norm_sq() / s.norm_sq())).map(|k| {
            let k = if cross.is_negative() { -k } else { k };
            c + &s.scale(&k)
        })
    };
    let value = match exact {
        Some(p) => CenterValue::exact(p),
        None => {
            let r = sqrt_ratio(&du.norm_sq());
            let [cx, cy] = c.to_real();
            let [ux, uy] = mid.unit_vector();
            CenterValue::approx([cx + r * ux, cy + r * uy])
        }
    };
    Ok(XDetail {
        value,
        angle: Some(mid),
    })
}

pub fn x_center_polygon_detail(p: &Polygon, tol: f64) -> Result<XDetail> {
    let c = p.centroid();
    if p.classify() == Class::A {
        return Ok(XDetail {
            value: CenterValue::exact(c),
            angle: None,
        });
    }
    let vm = p.vertex_multiset();
    if vm.classify() != Class::A {
        return x_center_detail(&vm, tol);
    }
    let verts = p.vertices();
    let n = verts.len();
    if all_collinear(verts) {
        return collinear_x_center(p, &c);
    }
    let pp = PolarPolygon::from_polygon(p)?;
    let starts: Vec<usize> = (0..n).filter(|&i| pp.vertices[i].ring == 1).collect();
    let mut pos = Vec::with_capacity(starts.len());
    let mut neg = Vec::with_capacity(starts.len());
    for &s in &starts {
        let (a, b) = chain_orientation(&pp, s)?;
        pos.push((s, chain_code(&pp, &a, true)));
        neg.push((s, chain_code(&pp, &b, false)));
    }
    let same = |i: usize, j: usize| verts[i] == verts[j];
    let cmp = |a: &ChainStep, b: &ChainStep| a.cmp_tol(b, tol);
    let zp = unique_min(&pos, cmp, same, "x_center_polygon: minimal positive code")?;
    let zm = unique_min(&neg, cmp, same, "x_center_polygon: minimal negative code")?;
    if verts[zp] == verts[zm] {
        return Ok(XDetail {
            value: CenterValue::exact(verts[zp].clone()),
            angle: Some(angle_of(&c, &verts[zp])?),
        });
    }
    ccw_arc_midpoint(&c, &verts[zp], &verts[zm], tol)
}

/// Signed step lengths along the line, in units of `|dir|`; a step is
/// positive when it ends closer to the centroid than it started.
fn collinear_code(t: &[Scalar], chain: &[usize]) -> Vec<Scalar> {
    chain
        .windows(2)
        .map(|w| {
            let (a, b) = (&t[w[0]], &t[w[1]]);
            let len = (b - a).abs();
            if b.abs() < a.abs() {
                len
            } else {
                -len
            }
        })
        .collect()
}

fn collinear_x_center(p: &Polygon, c: &Point) -> Result<XDetail> {
    let verts = p.vertices();
    let n = verts.len();
    let far = verts
        .iter()
        .max_by(|a, b| c.dist_sq(a).cmp(&c.dist_sq(b)))
        .expect("nonempty");
    let dir = far - c;
    let t: Vec<Scalar> = verts.iter().map(|v| (v - c).dot(&dir) / dir.norm_sq()).collect();
    let r = c.dist_sq(far);
    let mut seqs = Vec::new();
    for s in (0..n).filter(|&i| c.dist_sq(&verts[i]) == r) {
        for fwd in [true, false] {
            seqs.push((s, collinear_code(&t, &chain(n, s, fwd))));
        }
    }
    let w = unique_min(
        &seqs,
        |a: &Scalar, b: &Scalar| a.cmp(b),
        |i, j| verts[i] == verts[j],
        "x_center_polygon: collinear step sequences",
    )?;
    Ok(XDetail {
        value: CenterValue::exact(verts[w].clone()),
        angle: Some(angle_of(c, &verts[w])?),
    })
}

/// Center of rotational asymmetry of a polygon.
pub fn x_center_polygon(p: &Polygon) -> Result<CenterValue> {
    x_center_polygon_detail(p, DEFAULT_ANGLE_TOL).map(|d| d.value)
}

/// Half-plane agreement sign at chain position `j` given the sides
/// (`+1`, `-1`, `0` on the line) of the chain positions. Off the line, `+1`
/// when the last predecessor off the line lies on the same side; on the
/// line, `+1` when that predecessor and the earliest successor off the
/// line lie on the same side. Position 0 must be off the line.
pub fn half_plane_sign(sides: &[i32], j: usize) -> i32 {
    let pred = sides[..j]
        .iter()
        .rev()
        .find(|s| **s != 0)
        .copied()
        .expect("chain starts off the line");
    let other = if sides[j] != 0 {
        sides[j]
    } else {
        match sides[j + 1..].iter().find(|s| **s != 0) {
            Some(s) => *s,
            // the chain closes at its start, which is off the line
            None => sides[0],
        }
    };
    if pred == other {
        1
    } else {
        -1
    }
}

type Triple = (usize, usize, i32);

pub fn y_center_polygon_tol(p: &Polygon, tol: f64) -> Result<CenterValue> {
    let c = p.centroid();
    if p.classify() != Class::C {
        return Ok(CenterValue::exact(c));
    }
    let vm = p.vertex_multiset();
    if vm.classify() == Class::C {
        return y_center_multiset_tol(&vm, tol);
    }
    let x = x_center_polygon_detail(p, tol)?;
    let verts = p.vertices();
    let n = verts.len();
    let cring = exact_ranks(&verts.iter().map(|v| c.dist_sq(v)).collect::<Vec<_>>());
    let xring = distance_ranks(&distances_to(verts, &c, &x), tol);
    let sides: Vec<i32> = verts.iter().map(|v| side_of(v, &c, &x, tol)).collect();
    // candidates: outermost about the centroid, then outermost about x,
    // among the vertices off the line
    let off: Vec<usize> = (0..n).filter(|&i| sides[i] != 0).collect();
    let best = off
        .iter()
        .map(|&i| (cring[i], xring[i]))
        .min()
        .ok_or_else(|| Error::contract("y_center_polygon: candidates", "all vertices on the line"))?;
    let q: Vec<usize> = off
        .into_iter()
        .filter(|&i| (cring[i], xring[i]) == best)
        .collect();
    let mut seqs = Vec::with_capacity(q.len());
    for &w in &q {
        let codes: Vec<Vec<Triple>> = [true, false]
            .iter()
            .map(|&fwd| {
                let ch = chain(n, w, fwd);
                let s: Vec<i32> = ch.iter().map(|&i| sides[i]).collect();
                (1..=n)
                    .map(|j| (cring[ch[j]], xring[ch[j]], half_plane_sign(&s, j)))
                    .collect()
            })
            .collect();
        let smaller = codes.into_iter().min().expect("two chains");
        seqs.push((w, smaller));
    }
    let w = unique_min(
        &seqs,
        |a: &Triple, b: &Triple| a.cmp(b),
        |i, j| verts[i] == verts[j],
        "y_center_polygon: minimal triple code",
    )?;
    Ok(CenterValue::exact(verts[w].clone()))
}

/// Center of axial asymmetry of a polygon.
pub fn y_center_polygon(p: &Polygon) -> Result<CenterValue> {
    y_center_polygon_tol(p, DEFAULT_ANGLE_TOL)
}

/// Affine coefficients over the polygon centers reaching a fixed point of
/// the polygon's symmetry group.
pub fn center_through_polygon(p: &Polygon, target: &Point) -> Result<Coefficients> {
    let fs = p.fixed_set();
    if !fs.contains(target) {
        return Err(Error::NotFixed);
    }
    let c = CenterValue::exact(p.centroid());
    let x = x_center_polygon(p)?;
    let y = y_center_polygon(p)?;
    affine_coefficients(fs.class(), &c, &x, &y, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{int, ratio, Similarity};

    fn poly(v: &[(i64, i64)]) -> Polygon {
        Polygon::new(v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    fn pentagram() -> PolarPolygon {
        // V_k at (k - 1)/5 turns, cycle V1 V3 V2 V5 V4
        let at = |k: i64| (1, Some(Angle::turns_ratio(k - 1, 5)));
        PolarPolygon::from_polar(&[at(1), at(3), at(2), at(5), at(4)], DEFAULT_ANGLE_TOL).unwrap()
    }

    #[test]
    fn pentagram_chain_code() {
        let p = pentagram();
        let (pos, _) = chain_orientation(&p, 0).unwrap();
        assert_eq!(pos, vec![0, 1, 2, 3, 4, 0]);
        let code = chain_code(&p, &pos, true);
        assert_eq!(
            format_chain_code(&code),
            "((1,2·2π/5),(1,4·2π/5),(1,3·2π/5),(1,4·2π/5),(1,2·2π/5))"
        );
        assert_eq!(
            format_chain_code_tex(&code),
            r"((1,2\frac{2\pi}{5}),(1,4\frac{2\pi}{5}),(1,3\frac{2\pi}{5}),(1,4\frac{2\pi}{5}),(1,2\frac{2\pi}{5}))"
        );
    }

    #[test]
    fn mirrored_chains_swap() {
        let p = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let pp = PolarPolygon::from_polygon(&p).unwrap();
        let (pos, neg) = chain_orientation(&pp, 0).unwrap();
        // convex square listed counterclockwise: positive chain goes forward
        assert_eq!(pos[1], 1);
        assert_eq!(neg[1], 3);
        let m = p.transform(&Similarity::indirect(int(1), int(0), Point::origin()));
        let mp = PolarPolygon::from_polygon(&m).unwrap();
        let (pos, _) = chain_orientation(&mp, 0).unwrap();
        assert_eq!(pos[1], 3);
    }

    #[test]
    fn square_polygon_x_is_centroid() {
        let p = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(x_center_polygon(&p).unwrap().exact_point(), Some(&Point::from_ints(1, 1)));
    }

    #[test]
    fn collinear_three_gon() {
        let p = poly(&[(0, 0), (1, 0), (3, 0)]);
        assert_eq!(x_center_polygon(&p).unwrap().exact_point(), Some(&Point::from_ints(3, 0)));
    }

    #[test]
    fn collinear_symmetric_vertices() {
        // vertices symmetric about 0, adjacency breaks the half turn
        let p = poly(&[(-3, 0), (-2, 0), (1, 0), (3, 0), (-1, 0), (2, 0)]);
        assert_eq!(p.vertex_multiset().classify(), Class::A);
        assert_eq!(p.classify(), Class::B);
        let x = x_center_polygon(&p).unwrap();
        assert!(!x.same_as(&CenterValue::exact(p.centroid()), 0.0));
        let t = Similarity::direct(ratio(3, 5), ratio(4, 5), Point::from_ints(1, 2));
        assert!(x_center_polygon(&p.transform(&t)).unwrap().same_as(&x.transform(&t), 0.0));
    }

    #[test]
    fn half_plane_sign_examples() {
        assert_eq!(half_plane_sign(&[1, 1, 1, 1], 2), 1);
        assert_eq!(half_plane_sign(&[1, -1, 1, -1], 1), -1);
        assert_eq!(half_plane_sign(&[1, -1, 1, -1], 3), -1);
        assert_eq!(half_plane_sign(&[1, 0, 1, 1], 1), 1);
        assert_eq!(half_plane_sign(&[1, 0, -1, 1], 1), -1);
    }
}
