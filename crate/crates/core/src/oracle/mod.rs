//! Independent brute-force checks of the center constructions.
//!
//! Nothing here reuses the search strategies of the modules it checks:
//! symmetry groups are enumerated from every isometry fixed by two point
//! images, rotation orders of cyclic sets are computed on exact turn
//! fractions, and equivariance is sampled with exact rational similarities.

mod suites;
pub mod triangles;

use std::collections::BTreeMap;
use std::time::Duration;

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::angle::Turns;
use crate::corpus::{self, random_similarity};
use crate::cyclic::{b_center, CyclicCenter, CyclicConfiguration};
use crate::error::{Error, Result};
use crate::geom::{Point, Scalar, Similarity};
use crate::multiset_centers::{
    a_center_of_points, b_center_labeled_of_points, b_center_of_points, centroid_center,
    circumcenter_center, x_center_multiset, y_center_multiset,
};
use crate::polygon_centers::{x_center_polygon, y_center_polygon};
use crate::scene::Shape;
use crate::symmetry::{Line, Multiset, Polygon, Symmetric, SymmetryGroup};
use crate::value::CenterValue;

pub use suites::{
    equivariance_objects, equivariance_suite, iff_suite, oracle_suite, theorem_suite,
    triple_independence_iff, x_centroid_iff,
};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

/// Wall clock for suite timings. Reads zero on targets without a clock.
#[derive(Clone, Copy, Debug)]
pub struct Clock(#[cfg(not(target_arch = "wasm32"))] std::time::Instant);

impl Clock {
    pub fn start() -> Clock {
        Clock(
            #[cfg(not(target_arch = "wasm32"))]
            std::time::Instant::now(),
        )
    }

    pub fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        return self.0.elapsed();
        #[cfg(target_arch = "wasm32")]
        Duration::ZERO
    }
}

/// Outcome of a batch of checks. Passes exactly when `failures` is empty.
#[derive(Clone, Debug, Serialize)]
pub struct TrialReport {
    pub suite: String,
    pub trials: usize,
    pub seed: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TrialReport {
    pub fn new(suite: impl Into<String>, seed: u64) -> TrialReport {
        TrialReport {
            suite: suite.into(),
            trials: 0,
            seed,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Counts one trial and records a failure when `ok` is false.
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> (String, String, String)) {
        self.trials += 1;
        if !ok {
            let (input, expected, got) = failure();
            self.failures.push(Failure { input, expected, got });
        }
    }

    pub fn fail(&mut self, input: String, expected: String, got: String) {
        self.trials += 1;
        self.failures.push(Failure { input, expected, got });
    }

    /// Folds another report into this one, tagging its failures.
    pub fn absorb(&mut self, other: TrialReport) {
        self.trials += other.trials;
        self.elapsed += other.elapsed;
        for mut f in other.failures {
            f.input = format!("[{}] {}", other.suite, f.input);
            self.failures.push(f);
        }
        self.notes.extend(other.notes);
    }

    pub fn timed(mut self, start: Clock) -> TrialReport {
        self.elapsed = start.elapsed();
        self
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} trials, {} failures, seed {})",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.trials,
            self.failures.len(),
            self.seed
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub const BRUTE_FORCE_LIMIT: usize = 8;

/// Symmetry group of a multiset of at most [`BRUTE_FORCE_LIMIT`] points.
///
/// Two distinct points `a`, `b` are fixed; every isometry of the set sends
/// them to a pair at the same distance, and each such ordered pair gives one
/// direct and one indirect candidate. Candidates are kept when they map the
/// sorted point list onto itself.
pub fn brute_force_symmetries(s: &Multiset) -> Result<SymmetryGroup> {
    if s.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::Invalid(format!(
            "brute force handles at most {BRUTE_FORCE_LIMIT} points, got {}",
            s.len()
        )));
    }
    let target = s.sorted();
    let mut distinct = target.clone();
    distinct.dedup();
    let n = Scalar::from_integer(s.len().into());
    let mean = target.iter().fold(Point::origin(), |acc, p| &acc + p).scale(&(Scalar::one() / n));
    if distinct.len() == 1 {
        return Ok(SymmetryGroup {
            center: distinct[0].clone(),
            rotation_order: 1,
            axes: Vec::new(),
            continuous: true,
            elements: Vec::new(),
        });
    }
    let (a, b) = (&distinct[0], &distinct[1]);
    let u = b - a;
    let d = u.norm_sq();
    let mut elements = Vec::new();
    for a2 in &distinct {
        for b2 in &distinct {
            let v = b2 - a2;
            if v.norm_sq() != d {
                continue;
            }
            let rot = Similarity::direct(u.dot(&v) / &d, u.cross(&v) / &d, Point::origin());
            let refl = Similarity::indirect(
                (&u.x * &v.x - &u.y * &v.y) / &d,
                (&u.y * &v.x + &u.x * &v.y) / &d,
                Point::origin(),
            );
            for lin in [rot, refl] {
                let t = Similarity::translation(a2 - &lin.apply(a)).compose(&lin);
                let mut img: Vec<Point> = target.iter().map(|p| t.apply(p)).collect();
                img.sort();
                if img == target {
                    elements.push(t);
                }
            }
        }
    }
    let rotations: Vec<&Similarity> = elements.iter().filter(|e| !e.is_reflecting()).collect();
    let center = if rotations.len() >= 2 {
        let k = Scalar::from_integer(rotations.len().into());
        rotations
            .iter()
            .fold(Point::origin(), |acc, t| &acc + &t.apply(a))
            .scale(&(Scalar::one() / k))
    } else {
        mean
    };
    let mut axes: Vec<Line> = elements
        .iter()
        .filter(|e| e.is_reflecting())
        .map(|t| mirror_line(t, a, b))
        .collect();
    axes.sort();
    Ok(SymmetryGroup {
        center,
        rotation_order: rotations.len(),
        axes,
        continuous: false,
        elements,
    })
}

/// Fixed line of the reflection `t`, from two distinct points.
fn mirror_line(t: &Similarity, a: &Point, b: &Point) -> Line {
    let (ta, tb) = (t.apply(a), t.apply(b));
    if &ta != a {
        Line::new(a.midpoint(&ta), (&ta - a).perp())
    } else if &tb != b {
        Line::new(a.clone(), (&tb - b).perp())
    } else {
        Line::new(a.clone(), b - a)
    }
}

/// Same center, rotation order, continuity and set of mirror lines.
pub fn groups_agree(g: &SymmetryGroup, h: &SymmetryGroup) -> bool {
    g.center == h.center
        && g.rotation_order == h.rotation_order
        && g.continuous == h.continuous
        && g.axes.len() == h.axes.len()
        && g.axes.iter().all(|l| h.axes.iter().any(|m| l.same_line(m)))
}

fn wrap(t: Turns) -> Turns {
    t - Turns::from_integer(t.floor().to_integer())
}

/// Number of rotations (identity included) mapping a multiset of turn
/// fractions onto itself, by direct comparison of rotated copies.
pub fn exact_rotation_order(turns: &[Turns]) -> usize {
    let mut s: Vec<Turns> = turns.iter().map(|&t| wrap(t)).collect();
    s.sort();
    if s.is_empty() {
        return 1;
    }
    let mut shifts: Vec<Turns> = s.iter().map(|&t| wrap(t - s[0])).collect();
    shifts.dedup();
    shifts
        .into_iter()
        .filter(|&d| {
            let mut r: Vec<Turns> = s.iter().map(|&t| wrap(t + d)).collect();
            r.sort();
            r == s
        })
        .count()
}

/// Whether the reflection `t -> axis_sum - t` maps the set onto itself.
fn mirror_invariant(s: &[Turns], axis_sum: Turns) -> bool {
    let mut r: Vec<Turns> = s.iter().map(|&t| wrap(axis_sum - t)).collect();
    r.sort();
    r == s
}

/// Checks the statements about the union of a regular `m`-gon and a
/// regular `n`-gon on one circle, for `2 <= m, n <= max_order`, over the
/// phase grid `k / 2mn` and random rational phases:
///
/// - the union is rotationally symmetric exactly when `gcd(m, n) > 1`, by
///   exact enumeration and by the cyclic module;
/// - for coprime orders the polygons share at most one point;
/// - for coprime orders no three adjacent cross pairs span the same angle;
/// - for coprime orders two adjacent cross pairs with a common angle make
///   the union mirror symmetric, and their arc midpoints are not antipodal.
pub fn lemma_aux_suite(max_order: usize, seed: u64) -> TrialReport {
    let start = Clock::start();
    let mut report = TrialReport::new("lemma-aux", seed);
    let mut rng = corpus::rng(seed);
    let max = max_order as i64;
    for m in 2..=max {
        for n in 2..=max {
            let mut phases: Vec<Turns> = (0..2 * m * n).map(|k| Turns::new(k, 2 * m * n)).collect();
            for _ in 0..8 {
                let q = rng.gen_range(2..=997);
                phases.push(Turns::new(rng.gen_range(0..q), q));
            }
            for phase in phases {
                check_polygon_pair(&mut report, m, n, phase);
            }
        }
    }
    report.timed(start)
}

fn check_polygon_pair(report: &mut TrialReport, m: i64, n: i64, phase: Turns) {
    let p: Vec<Turns> = (0..m).map(|i| Turns::new(i, m)).collect();
    let q: Vec<Turns> = (0..n).map(|j| wrap(phase + Turns::new(j, n))).collect();
    let mut union: Vec<Turns> = p.iter().chain(&q).cloned().collect();
    union.sort();
    union.dedup();
    let input = || format!("m={m} n={n} phase={phase}");
    let coprime = m.gcd(&n) == 1;

    let order = exact_rotation_order(&union);
    report.check((order > 1) == !coprime, || {
        (input(), format!("symmetric = {}", !coprime), format!("rotation order {order}"))
    });
    let pairs: Vec<(i64, i64)> = union.iter().map(|t| (*t.numer(), *t.denom())).collect();
    match CyclicConfiguration::unit_turns(&pairs) {
        Ok(cfg) => {
            let got = cfg.rotation_order();
            report.check(got == order, || (input(), format!("order {order}"), format!("cyclic module order {got}")));
        }
        Err(e) => report.fail(input(), format!("order {order}"), e.to_string()),
    }
    if !coprime {
        return;
    }

    let shared = p.iter().filter(|t| q.contains(t)).count();
    report.check(shared <= 1, || (input(), "at most one shared point".into(), format!("{shared} shared")));

    // adjacent cross pairs (v in P, w in Q) with their unsigned angle and arc midpoint
    let k = union.len();
    let mut by_angle: BTreeMap<Turns, Vec<(Turns, Turns, Turns)>> = BTreeMap::new();
    for i in 0..k {
        let (s, t) = (union[i], union[(i + 1) % k]);
        let gap = if i + 1 == k { wrap(t - s + Turns::one()) } else { t - s };
        let gap = if gap.is_zero() && k == 1 { Turns::one() } else { gap };
        let (sp, sq, tp, tq) = (p.contains(&s), q.contains(&s), p.contains(&t), q.contains(&t));
        let oriented = if sp && tq && !(sq && tp) {
            Some((s, t))
        } else if sq && tp && !(sp && tq) {
            Some((t, s))
        } else {
            None
        };
        let Some((v, w)) = oriented else { continue };
        let angle = gap.min(Turns::one() - gap);
        let mid = wrap(s + gap / 2);
        by_angle.entry(angle).or_default().push((v, w, mid));
    }
    for (angle, list) in &by_angle {
        report.check(list.len() <= 2, || {
            (input(), "at most two adjacent pairs per angle".into(), format!("{} pairs at angle {angle}", list.len()))
        });
        if let [(v1, w1, m1), (v2, w2, m2)] = list.as_slice() {
            let sym = mirror_invariant(&union, *v1 + *v2) && wrap(*v1 + *v2) == wrap(*w1 + *w2);
            report.check(sym, || {
                (input(), format!("mirror symmetry through the bisector of {v1},{v2}"), "not symmetric".into())
            });
            let antipodal = wrap(*m1 - *m2) == Turns::new(1, 2);
            report.check(!antipodal, || (input(), "midpoints not antipodal".into(), format!("{m1} and {m2}")));
        }
    }
}

/// Every subset of `2..=max_n` points of the `divisions`-division grid on
/// the unit circle: the cyclic center is the circle center exactly when the
/// subset is rotationally symmetric.
pub fn first_step_iff(divisions: i64, max_n: usize) -> TrialReport {
    let start = Clock::start();
    let mut report = TrialReport::new("first-step", 0);
    let mut idx: Vec<i64> = Vec::new();
    fn rec(report: &mut TrialReport, d: i64, from: i64, max_n: usize, idx: &mut Vec<i64>) {
        if idx.len() >= 2 {
            check_first_step(report, d, idx);
        }
        if idx.len() == max_n {
            return;
        }
        for k in from..d {
            idx.push(k);
            rec(report, d, k + 1, max_n, idx);
            idx.pop();
        }
    }
    rec(&mut report, divisions, 0, max_n, &mut idx);
    report.timed(start)
}

fn check_first_step(report: &mut TrialReport, d: i64, idx: &[i64]) {
    let turns: Vec<Turns> = idx.iter().map(|&k| Turns::new(k, d)).collect();
    let symmetric = exact_rotation_order(&turns) > 1;
    let pairs: Vec<(i64, i64)> = idx.iter().map(|&k| (k, d)).collect();
    let got = CyclicConfiguration::unit_turns(&pairs).and_then(|c| b_center(&c));
    let input = || format!("{idx:?} / {d}");
    match got {
        Ok(c) => report.check(c.is_center() == symmetric, || {
            (
                input(),
                if symmetric { "circle center" } else { "a point on the circle" }.into(),
                match c {
                    CyclicCenter::Center => "circle center".into(),
                    CyclicCenter::OnCircle(p) => format!("point at {}", p.theta.describe(6)),
                },
            )
        }),
        Err(e) => report.fail(input(), "a center".into(), e.to_string()),
    }
}

/// The centers under test, each with its domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CenterId {
    Centroid,
    Circumcenter,
    A,
    B,
    BLabeled,
    XMultiset,
    YMultiset,
    XPolygon,
    YPolygon,
}

impl CenterId {
    pub const ALL: [CenterId; 9] = [
        CenterId::Centroid,
        CenterId::Circumcenter,
        CenterId::A,
        CenterId::B,
        CenterId::BLabeled,
        CenterId::XMultiset,
        CenterId::YMultiset,
        CenterId::XPolygon,
        CenterId::YPolygon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CenterId::Centroid => "centroid",
            CenterId::Circumcenter => "circumcenter",
            CenterId::A => "a-center",
            CenterId::B => "b-center",
            CenterId::BLabeled => "b-center-labeled",
            CenterId::XMultiset => "x-multiset",
            CenterId::YMultiset => "y-multiset",
            CenterId::XPolygon => "x-polygon",
            CenterId::YPolygon => "y-polygon",
        }
    }

    pub fn evaluate(self, shape: &Shape) -> Result<CenterValue> {
        let wrong = || Error::Invalid(format!("{} is not defined on a {}", self.name(), shape.kind()));
        match (self, shape) {
            (CenterId::Centroid, s) => Ok(centroid_center(&Multiset::new(s.points().to_vec())?)),
            (CenterId::Circumcenter, Shape::Multiset(m)) => circumcenter_center(m),
            (CenterId::A, Shape::Multiset(m)) => a_center_of_points(m),
            (CenterId::B, Shape::Multiset(m)) => b_center_of_points(m),
            (CenterId::BLabeled, Shape::Labeled(l)) => b_center_labeled_of_points(l),
            (CenterId::XMultiset, Shape::Multiset(m)) => x_center_multiset(m),
            (CenterId::YMultiset, Shape::Multiset(m)) => y_center_multiset(m),
            (CenterId::XPolygon, Shape::Polygon(p)) => x_center_polygon(p),
            (CenterId::YPolygon, Shape::Polygon(p)) => y_center_polygon(p),
            _ => Err(wrong()),
        }
    }
}

/// Compares `T(Z(P))` with `Z(T(P))` for `trials` random similarities,
/// reflections included. Exact values must agree exactly; approximate ones
/// within `tol` relative to the extent of the transformed object.
pub fn check_equivariance(id: CenterId, shape: &Shape, trials: usize, seed: u64, tol: f64) -> TrialReport {
    let start = Clock::start();
    let mut report = TrialReport::new(id.name(), seed);
    let base = match id.evaluate(shape) {
        Ok(v) => v,
        Err(e) => {
            report.fail(shape.describe(), "a center value".into(), e.to_string());
            return report.timed(start);
        }
    };
    let mut rng = corpus::rng(seed);
    for _ in 0..trials {
        let t = random_similarity(&mut rng, true);
        let moved = shape.transform(&t);
        let want = base.transform(&t);
        match id.evaluate(&moved) {
            Ok(got) => {
                let ok = if want.is_exact() && got.is_exact() {
                    want.exact_point() == got.exact_point()
                } else {
                    want.distance(&got).to_f64() <= tol * moved.extent()
                };
                report.check(ok, || (moved.describe(), want.to_string(), got.to_string()));
            }
            Err(e) => report.fail(moved.describe(), want.to_string(), e.to_string()),
        }
    }
    report.timed(start)
}

/// All cycles through `n` labeled vertices up to rotation and reversal:
/// vertex 0 first, second vertex smaller than the last.
pub fn adjacency_cycles(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if cur.len() == n {
            if n < 3 || cur[1] < cur[n - 1] {
                out.push(cur.clone());
            }
            return;
        }
        for v in 1..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut used = vec![false; n];
    used[0] = true;
    rec(&mut vec![0], &mut used, &mut out);
    out
}

/// A polygon on the given vertices whose symmetry group is trivial, if any
/// adjacency cycle gives one.
pub fn search_asymmetric_adjacency(vertices: &Multiset) -> Option<Polygon> {
    let pts = vertices.points();
    if pts.len() < 3 {
        return None;
    }
    adjacency_cycles(pts.len()).into_iter().find_map(|c| {
        let poly = Polygon::new(c.iter().map(|&i| pts[i].clone()).collect()).ok()?;
        poly.symmetry_group().is_trivial().then_some(poly)
    })
}

/// Adjacency search on the vertices of a regular `k`-gon, done on vertex
/// indices: the symmetries of any polygon on these vertices lie in the
/// dihedral group of the `k`-gon, acting as `i -> r + i` and `i -> r - i`.
/// Returns the number of cycles examined and the first asymmetric one.
pub fn regular_adjacency_search(k: usize) -> (usize, Option<Vec<usize>>) {
    let cycles = adjacency_cycles(k);
    let count = cycles.len();
    let found = cycles.into_iter().find(|c| {
        (0..k).all(|r| {
            let rot: Vec<usize> = c.iter().map(|&i| (r + i) % k).collect();
            let refl: Vec<usize> = c.iter().map(|&i| (r + k - i) % k).collect();
            (r == 0 || !same_cycle(c, &rot)) && !same_cycle(c, &refl)
        })
    });
    (count, found)
}

/// Equal as cyclic sequences up to rotation and reversal.
fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    let n = a.len();
    (0..n).any(|s| {
        (0..n).all(|i| a[i] == b[(s + i) % n]) || (0..n).all(|i| a[i] == b[(s + n - i) % n])
    })
}
