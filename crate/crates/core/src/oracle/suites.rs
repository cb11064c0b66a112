//! Corpus-driven suites behind `verify`.

use rand::Rng;

use super::{brute_force_symmetries, check_equivariance, groups_agree, CenterId, Clock, TrialReport};
use crate::corpus;
use crate::geom::{all_collinear, circumcircle, Point, Scalar};
use crate::multiset_centers::{
    a_center_of_points, b_center_of_points, center_through, centroid_center, x_center_multiset,
    y_center_multiset,
};
use crate::polygon_centers::{center_through_polygon, x_center_polygon, y_center_polygon};
use crate::scene::{is_simple, Shape};
use crate::symmetry::{Class, FixedSet, Multiset, Polygon, Symmetric};
use crate::value::{affinely_independent, CenterValue};
use crate::Result;

/// `count` objects in the domain of `id`, deterministic in `seed`.
pub fn equivariance_objects(id: CenterId, count: usize, seed: u64) -> Vec<Shape> {
    let ms = |v: Vec<Multiset>| v.into_iter().map(Shape::Multiset).collect::<Vec<_>>();
    match id {
        CenterId::Centroid => ms(corpus::random_multisets(seed, count, 8)),
        CenterId::Circumcenter | CenterId::B => ms(corpus::cyclic_sets(seed, count)),
        CenterId::A => {
            let mut out = Vec::new();
            let mut round = 0;
            while out.len() < count {
                for m in corpus::cyclic_sets(seed.wrapping_add(round), 4 * count) {
                    if out.len() < count && a_center_of_points(&m).is_ok() {
                        out.push(Shape::Multiset(m));
                    }
                }
                round += 1;
            }
            out
        }
        CenterId::BLabeled => corpus::labeled_cyclic_sets(seed, count)
            .into_iter()
            .map(Shape::Labeled)
            .collect(),
        CenterId::XMultiset | CenterId::YMultiset => {
            let q = count.div_ceil(4);
            let mut v = corpus::symmetric_multisets(seed, q);
            v.extend(corpus::axial_multisets(seed + 1, q));
            v.extend(corpus::perturbed_multisets(seed + 2, q));
            v.extend(corpus::random_multisets(seed + 3, q, 7));
            v.truncate(count);
            ms(v)
        }
        CenterId::XPolygon | CenterId::YPolygon => {
            let per = count.div_ceil(3);
            let mut v = corpus::polygon_corpus(seed, per);
            // interleave classes so that truncation keeps all three
            v.sort_by_key(|p| p.classify());
            let mut picked = Vec::new();
            let by_class: Vec<Vec<Polygon>> = [Class::A, Class::B, Class::C]
                .iter()
                .map(|c| v.iter().filter(|p| p.classify() == *c).cloned().collect())
                .collect();
            let mut i = 0;
            while picked.len() < count && i < v.len() {
                for b in &by_class {
                    if let Some(p) = b.get(i) {
                        if picked.len() < count {
                            picked.push(Shape::Polygon(p.clone()));
                        }
                    }
                }
                i += 1;
            }
            picked
        }
    }
}

/// Every center on `objects` objects of its domain, `trials` similarities each.
pub fn equivariance_suite(objects: usize, trials: usize, seed: u64, tol: f64) -> TrialReport {
    let start = Clock::start();
    let mut report = TrialReport::new("equivariance", seed);
    for id in CenterId::ALL {
        let mut sub = TrialReport::new(id.name(), seed);
        for (i, shape) in equivariance_objects(id, objects, seed).iter().enumerate() {
            sub.absorb(check_equivariance(id, shape, trials, seed.wrapping_add(i as u64), tol));
        }
        sub.suite = id.name().into();
        report.notes.push(sub.summary());
        report.absorb(sub);
    }
    report.timed(start)
}

/// The x center equals the centroid on constructed symmetric multisets and
/// differs from it on perturbed and mirror-only ones.
pub fn x_centroid_iff(seed: u64) -> TrialReport {
    let start = Clock::start();
    let mut report = TrialReport::new("x-equals-centroid", seed);
    let symmetric = corpus::symmetric_multisets(seed, 60);
    let mut others = corpus::perturbed_multisets(seed + 1, 60);
    others.extend(corpus::axial_multisets(seed + 2, 20));
    for (set, want) in [(&symmetric, true), (&others, false)] {
        for m in set {
            let c = centroid_center(m);
            match x_center_multiset(m) {
                Ok(x) => {
                    let equal = x.exact_point() == c.exact_point() && x.is_exact();
                    let ok = if want { equal } else { !x.same_as(&c, 1e-12 * Shape::Multiset(m.clone()).extent()) };
                    report.check(ok, || {
                        (format!("{:?}", m.points()), format!("x = centroid: {want}"), format!("x = {x}, c = {c}"))
                    });
                }
                Err(e) => report.fail(format!("{:?}", m.points()), "an x center".into(), e.to_string()),
            }
        }
    }
    report.notes.push(format!("{} symmetric, {} others", symmetric.len(), others.len()));
    report.timed(start)
}

fn triple(shape: &Shape) -> Result<[CenterValue; 3]> {
    match shape {
        Shape::Polygon(p) => Ok([CenterValue::exact(p.centroid()), x_center_polygon(p)?, y_center_polygon(p)?]),
        Shape::Multiset(m) => Ok([centroid_center(m), x_center_multiset(m)?, y_center_multiset(m)?]),
        Shape::Labeled(_) => Err(crate::Error::Invalid("labeled multisets have no x and y centers".into())),
    }
}

/// `(c, x, y)` affinely independent exactly for class `C`, on multisets and
/// on polygons of every class.
pub fn triple_independence_iff(seed: u64) -> TrialReport {
    let start = Clock::start();
    let mut report = TrialReport::new("triple-independence", seed);
    let mut shapes: Vec<Shape> = Vec::new();
    shapes.extend(corpus::symmetric_multisets(seed, 60).into_iter().map(Shape::Multiset));
    shapes.extend(corpus::perturbed_multisets(seed + 1, 60).into_iter().map(Shape::Multiset));
    shapes.extend(corpus::axial_multisets(seed + 2, 20).into_iter().map(Shape::Multiset));
    let polygons = corpus::polygon_corpus(seed + 3, 40);
    let (mut collinear, mut nonsimple) = (0, 0);
    let mut counts = [0usize; 3];
    for p in &polygons {
        if all_collinear(p.vertices()) {
            collinear += 1;
        } else if !is_simple(p) {
            nonsimple += 1;
        }
        counts[p.classify() as usize] += 1;
    }
    report.notes.push(format!(
        "{} polygons: {} / {} / {} in classes A / B / C, {collinear} collinear, {nonsimple} non-simple",
        polygons.len(),
        counts[0],
        counts[1],
        counts[2]
    ));
    shapes.extend(polygons.into_iter().map(Shape::Polygon));
    for s in &shapes {
        let class = s.classify();
        match triple(s) {
            Ok([c, x, y]) => {
                let indep = affinely_independent(&c, &x, &y, 1e-9);
                report.check(indep == (class == Class::C), || {
                    (s.describe(), format!("class {class}"), format!("c={c} x={x} y={y} independent={indep}"))
                });
                let x_is_c = x.is_exact() && x.exact_point() == c.exact_point();
                report.check(x_is_c == (class == Class::A), || {
                    (s.describe(), format!("class {class}"), format!("c={c} x={x}"))
                });
            }
            Err(e) => report.fail(s.describe(), format!("centers of a class {class} object"), e.to_string()),
        }
    }
    report.timed(start)
}

pub fn iff_suite(seed: u64) -> TrialReport {
    let start = Clock::start();
    let mut report = TrialReport::new("iff", seed);
    report.absorb(x_centroid_iff(seed));
    report.absorb(triple_independence_iff(seed));
    report.absorb(super::first_step_iff(12, 6));
    report.timed(start)
}

fn sample_targets(fs: &FixedSet, rng: &mut corpus::Rng8, count: usize) -> Vec<Point> {
    (0..count)
        .map(|_| {
            let t = Scalar::new(rng.gen_range(-40..=40).into(), rng.gen_range(1..=8).into());
            let u = Scalar::new(rng.gen_range(-40..=40).into(), rng.gen_range(1..=8).into());
            fs.sample(&t, &u)
        })
        .collect()
}

/// Values of every implemented center on the object.
fn all_centers(shape: &Shape) -> Vec<(&'static str, Result<CenterValue>)> {
    let mut out = Vec::new();
    match shape {
        Shape::Multiset(m) => {
            out.push(("centroid", Ok(centroid_center(m))));
            out.push(("x", x_center_multiset(m)));
            out.push(("y", y_center_multiset(m)));
            let mut d = m.sorted();
            d.dedup();
            let cyclic = d.len() == 2
                || (!all_collinear(&d) && circumcircle(&d).is_ok_and(|c| d.iter().all(|p| c.contains(p))));
            if cyclic {
                out.push(("circumcenter", crate::multiset_centers::circumcenter_center(m)));
                out.push(("b", b_center_of_points(m)));
                if let Ok(a) = a_center_of_points(m) {
                    out.push(("a", Ok(a)));
                }
            }
        }
        Shape::Labeled(l) => {
            out.push(("centroid", Ok(centroid_center(&l.unlabeled()))));
            out.push(("b-labeled", crate::multiset_centers::b_center_labeled_of_points(l)));
        }
        Shape::Polygon(p) => {
            let v = p.vertex_multiset();
            out.push(("centroid", Ok(CenterValue::exact(p.centroid()))));
            out.push(("x-polygon", x_center_polygon(p)));
            out.push(("y-polygon", y_center_polygon(p)));
            out.push(("x-vertices", x_center_multiset(&v)));
            out.push(("y-vertices", y_center_multiset(&v)));
        }
    }
    out
}

/// On `trials` multisets and `trials` polygons: affine coefficients over
/// `(c, x, y)` reproduce sampled fixed points, and every center value lies
/// in the fixed set of the object's symmetry group.
pub fn theorem_suite(trials: usize, seed: u64, tol: f64) -> TrialReport {
    let start = Clock::start();
    let mut report = TrialReport::new("theorem", seed);
    let mut rng = corpus::rng(seed);
    let q = trials.div_ceil(4);
    let mut shapes: Vec<Shape> = Vec::new();
    shapes.extend(corpus::symmetric_multisets(seed, q).into_iter().map(Shape::Multiset));
    shapes.extend(corpus::axial_multisets(seed + 1, q).into_iter().map(Shape::Multiset));
    shapes.extend(corpus::random_multisets(seed + 2, q, 7).into_iter().map(Shape::Multiset));
    shapes.extend(corpus::cyclic_sets(seed + 3, q).into_iter().map(Shape::Multiset));
    shapes.truncate(trials);
    let mut polygons = corpus::polygon_corpus(seed + 4, trials.div_ceil(3));
    polygons.truncate(trials);
    shapes.extend(polygons.into_iter().map(Shape::Polygon));
    let labeled = corpus::labeled_cyclic_sets(seed + 5, 20);

    for s in &shapes {
        let fs = s.fixed_set();
        let scale = tol * s.extent();
        for target in sample_targets(&fs, &mut rng, 5) {
            let coef = match s {
                Shape::Multiset(m) => center_through(m, &target),
                Shape::Polygon(p) => center_through_polygon(p, &target),
                Shape::Labeled(_) => unreachable!(),
            };
            let got = coef.and_then(|k| {
                let [c, x, y] = triple(s)?;
                Ok(k.evaluate(&c, &x, &y))
            });
            match got {
                Ok(v) => {
                    let ok = match v.exact_point() {
                        Some(p) => p == &target,
                        None => v.distance(&CenterValue::exact(target.clone())).to_f64() <= scale,
                    };
                    report.check(ok, || (s.describe(), target.to_string(), v.to_string()));
                }
                Err(e) => report.fail(s.describe(), target.to_string(), e.to_string()),
            }
        }
    }
    for s in shapes.iter().chain(labeled.iter().map(|l| Shape::Labeled(l.clone())).collect::<Vec<_>>().iter()) {
        let fs = s.fixed_set();
        let scale = tol * s.extent();
        for (name, v) in all_centers(s) {
            match v {
                Ok(v) => report.check(fs.contains_value(&v, scale), || {
                    (s.describe(), format!("{name} in {fs:?}"), v.to_string())
                }),
                Err(e) => report.fail(s.describe(), format!("{name} value"), e.to_string()),
            }
        }
    }
    report.timed(start)
}

/// The symmetry module against the brute-force enumeration, on every
/// multiset of at most four points of the 5x5 grid and on `random` random
/// multisets of at most eight points.
pub fn oracle_suite(random: usize, seed: u64) -> TrialReport {
    let start = Clock::start();
    let mut report = TrialReport::new("oracle", seed);
    let grid = corpus::grid_multisets(4, 5);
    report.notes.push(format!("{} grid multisets", grid.len()));
    let mut rng = corpus::rng(seed);
    let mut all = grid;
    for m in corpus::random_multisets(seed, random, 8) {
        let t = corpus::random_similarity(&mut rng, true);
        all.push(m.transform(&t));
    }
    for m in &all {
        let want = brute_force_symmetries(m).expect("small multiset");
        let got = m.symmetry_group();
        report.check(groups_agree(&want, &got), || (format!("{:?}", m.points()), want.to_string(), got.to_string()));
    }
    report.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_objects_cover_all_classes() {
        let objs = equivariance_objects(CenterId::YPolygon, 9, 3);
        let classes: Vec<Class> = objs.iter().map(|s| s.classify()).collect();
        assert!(classes.contains(&Class::A) && classes.contains(&Class::B) && classes.contains(&Class::C));
    }
}
