//! Deterministic generators of test objects: symmetric and perturbed
//! multisets, polygons of every class, rational points on circles and
//! random rational similarities.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{int, ratio, Point, Scalar, Similarity};
use crate::scene::is_simple;
use crate::symmetry::{Class, LabeledMultiset, Multiset, Polygon, Symmetric};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_point(rng: &mut Rng8, range: i64) -> Point {
    Point::from_ints(rng.gen_range(-range..=range), rng.gen_range(-range..=range))
}

fn random_rational(rng: &mut Rng8, num: i64, den: i64) -> Scalar {
    ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// `(cos, sin)` of a rotation with rational entries, from a Pythagorean
/// triple or a quarter turn.
pub fn pythagorean_rotation(rng: &mut Rng8) -> (Scalar, Scalar) {
    let m: i64 = rng.gen_range(1..=6);
    let n: i64 = rng.gen_range(0..m);
    let h = m * m + n * n;
    let (a, b) = (ratio(m * m - n * n, h), ratio(2 * m * n, h));
    match rng.gen_range(0..4) {
        0 => (a, b),
        1 => (-b, a),
        2 => (-a, -b),
        _ => (b, -a),
    }
}

/// Rotation by a Pythagorean angle, scale in `[1/4, 4]`, small rational
/// translation, and a reflection half of the time when allowed.
pub fn random_similarity(rng: &mut Rng8, reflections: bool) -> Similarity {
    const SCALES: [(i64, i64); 9] = [(1, 4), (1, 3), (1, 2), (2, 3), (1, 1), (3, 2), (2, 1), (3, 1), (4, 1)];
    let (sn, sd) = SCALES[rng.gen_range(0..SCALES.len())];
    let s = ratio(sn, sd);
    let (c, si) = pythagorean_rotation(rng);
    let t = Point::new(random_rational(rng, 20, 4), random_rational(rng, 20, 4));
    if reflections && rng.gen_bool(0.5) {
        Similarity::indirect(&c * &s, &si * &s, t)
    } else {
        Similarity::direct(&c * &s, &si * &s, t)
    }
}

/// Rational point on the unit circle from the parameter `t`.
pub fn circle_point(t: &Scalar) -> Point {
    let one = int(1);
    let d = &one + t * t;
    Point::new((&one - t * t) / &d, int(2) * t / d)
}

/// `count` distinct rational points on the unit circle.
pub fn random_circle_points(rng: &mut Rng8, count: usize) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::new();
    while pts.len() < count {
        let p = if rng.gen_bool(0.1) {
            Point::from_ints(-1, 0)
        } else {
            circle_point(&random_rational(rng, 12, 7))
        };
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

fn rotate_quarter(p: &Point, k: usize) -> Point {
    (0..k % 4).fold(p.clone(), |q, _| q.perp())
}

fn orbit(seeds: &[Point], k: usize, mirror: bool) -> Vec<Point> {
    let step = 4 / k;
    let mut out = Vec::new();
    for s in seeds {
        for i in 0..k {
            out.push(rotate_quarter(s, i * step));
            if mirror {
                out.push(rotate_quarter(&Point::new(s.x.clone(), -&s.y), i * step));
            }
        }
    }
    out
}

/// Multisets with a rotation of order 2 or 4 (class `A`), moved by a
/// random similarity. Some include the center point or repeated points.
pub fn symmetric_multisets(seed: u64, count: usize) -> Vec<Multiset> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = if rng.gen_bool(0.5) { 2 } else { 4 };
        let seeds: Vec<Point> = (0..rng.gen_range(1..=3)).map(|_| random_point(&mut rng, 5)).collect();
        if seeds.iter().all(|s| s.is_zero()) {
            continue;
        }
        let mut pts = orbit(&seeds, k, rng.gen_bool(0.3));
        if rng.gen_bool(0.3) {
            pts.push(Point::origin());
        }
        let t = random_similarity(&mut rng, true);
        let m = Multiset::new(pts).expect("nonempty").transform(&t);
        if m.classify() == Class::A {
            out.push(m);
        }
    }
    out
}

/// Symmetric multisets with one point moved, keeping only those that lost
/// every rotation (classes `B` and `C`).
pub fn perturbed_multisets(seed: u64, count: usize) -> Vec<Multiset> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    let mut round = 0;
    while out.len() < count {
        round += 1;
        for m in symmetric_multisets(seed.wrapping_add(round * 7919), count) {
            let mut pts = m.points().to_vec();
            let i = rng.gen_range(0..pts.len());
            let d = Point::new(random_rational(&mut rng, 3, 2), random_rational(&mut rng, 3, 2));
            if d.is_zero() {
                continue;
            }
            pts[i] = &pts[i] + &d;
            let p = Multiset::new(pts).expect("nonempty");
            if p.classify() != Class::A && out.len() < count {
                out.push(p);
            }
        }
    }
    out
}

/// Multisets with exactly one mirror axis (class `B`).
pub fn axial_multisets(seed: u64, count: usize) -> Vec<Multiset> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut pts = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let p = random_point(&mut rng, 5);
            pts.push(Point::new(-&p.x, p.y.clone()));
            pts.push(p);
        }
        if rng.gen_bool(0.4) {
            pts.push(Point::new(Scalar::zero(), int(rng.gen_range(-5..=5))));
        }
        let t = random_similarity(&mut rng, true);
        let m = Multiset::new(pts).expect("nonempty").transform(&t);
        if m.classify() == Class::B {
            out.push(m);
        }
    }
    out
}

/// Multisets of `1..=max_n` points from a small grid; mostly generic,
/// a quarter of them symmetric by construction.
pub fn random_multisets(seed: u64, count: usize, max_n: usize) -> Vec<Multiset> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            if rng.gen_bool(0.25) && max_n >= 2 {
                let k = if rng.gen_bool(0.5) { 2 } else { 4 };
                let seeds: Vec<Point> = (0..(max_n / (2 * k)).max(1)).map(|_| random_point(&mut rng, 4)).collect();
                let mut pts = orbit(&seeds, k, false);
                pts.truncate(max_n);
                Multiset::new(pts).expect("nonempty")
            } else {
                let n = rng.gen_range(1..=max_n);
                Multiset::new((0..n).map(|_| random_point(&mut rng, 4)).collect()).expect("nonempty")
            }
        })
        .collect()
}

/// Every multiset of `1..=max_n` points from the `size x size` grid.
pub fn grid_multisets(max_n: usize, size: i64) -> Vec<Multiset> {
    let grid: Vec<Point> = (0..size)
        .flat_map(|x| (0..size).map(move |y| Point::from_ints(x, y)))
        .collect();
    let mut out = Vec::new();
    let mut idx = Vec::new();
    fn rec(grid: &[Point], start: usize, left: usize, idx: &mut Vec<usize>, out: &mut Vec<Multiset>) {
        if !idx.is_empty() {
            out.push(Multiset::new(idx.iter().map(|&i| grid[i].clone()).collect()).expect("nonempty"));
        }
        if left == 0 {
            return;
        }
        for i in start..grid.len() {
            idx.push(i);
            rec(grid, i, left - 1, idx, out);
            idx.pop();
        }
    }
    rec(&grid, 0, max_n, &mut idx, &mut out);
    out
}

/// Distinct rational concyclic point sets of 2 to 7 points, moved by a
/// random similarity.
pub fn cyclic_sets(seed: u64, count: usize) -> Vec<Multiset> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let pts = if rng.gen_bool(0.3) {
                // rotationally symmetric: a quarter-turn or half-turn orbit
                let k = if rng.gen_bool(0.5) { 2 } else { 4 };
                let m = rng.gen_range(1..=2);
                let seeds = random_circle_points(&mut rng, m);
                let mut o = orbit(&seeds, k, false);
                o.sort();
                o.dedup();
                o
            } else {
                let n = rng.gen_range(2..=7);
                random_circle_points(&mut rng, n)
            };
            let t = random_similarity(&mut rng, true);
            Multiset::new(pts).expect("nonempty").transform(&t)
        })
        .collect()
}

/// Cyclic sets with labels in `1..=3`.
pub fn labeled_cyclic_sets(seed: u64, count: usize) -> Vec<LabeledMultiset> {
    let mut rng = rng(seed);
    cyclic_sets(seed ^ 0x5eed, count)
        .into_iter()
        .map(|m| {
            let labels = (0..m.len()).map(|_| rng.gen_range(1..=3)).collect();
            LabeledMultiset::new(m.points().to_vec(), labels).expect("same length")
        })
        .collect()
}

fn shuffled_cycle(rng: &mut Rng8, pts: &[Point]) -> Polygon {
    let mut v = pts.to_vec();
    v.shuffle(rng);
    Polygon::new(v).expect("at least 3 vertices")
}

/// Polygons of every class, at least `per_class` of each, including
/// non-simple ones, collinear ones, and polygons whose vertex multiset has
/// more symmetry than the polygon itself.
pub fn polygon_corpus(seed: u64, per_class: usize) -> Vec<Polygon> {
    let mut rng = rng(seed);
    let mut buckets: [Vec<Polygon>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut recipe = 0usize;
    let full = |b: &[Vec<Polygon>; 3]| b.iter().all(|v| v.len() >= per_class);
    let mut guard = 0;
    while !full(&buckets) && guard < 100_000 {
        guard += 1;
        recipe += 1;
        let p = match recipe % 7 {
            // half-turn cycle: p1..pk, -p1..-pk
            0 => {
                let seeds: Vec<Point> = (0..rng.gen_range(2..=3)).map(|_| random_point(&mut rng, 5)).collect();
                let mut v = seeds.clone();
                v.extend(seeds.iter().map(|s| Point::new(-&s.x, -&s.y)));
                Polygon::new(v).ok()
            }
            // quarter-turn cycle
            1 => {
                let seeds: Vec<Point> = (0..rng.gen_range(1..=2)).map(|_| random_point(&mut rng, 5)).collect();
                let v: Vec<Point> = (0..4)
                    .flat_map(|k| seeds.iter().map(move |s| rotate_quarter(s, k)))
                    .collect();
                Polygon::new(v).ok()
            }
            // mirror cycle: p1..pk then their mirror images in reverse
            2 => {
                let seeds: Vec<Point> = (0..rng.gen_range(2..=4)).map(|_| random_point(&mut rng, 5)).collect();
                let mut v = seeds.clone();
                v.extend(seeds.iter().rev().map(|s| Point::new(-&s.x, s.y.clone())));
                Polygon::new(v).ok()
            }
            // generic
            3 => Polygon::new((0..rng.gen_range(3..=7)).map(|_| random_point(&mut rng, 6)).collect()).ok(),
            // collinear, sometimes centrally symmetric
            4 => {
                let k = rng.gen_range(2..=3);
                let mut ts: Vec<i64> = (0..k).map(|_| rng.gen_range(-6..=6)).collect();
                if rng.gen_bool(0.5) {
                    let neg: Vec<i64> = ts.iter().map(|t| -t).collect();
                    ts.extend(neg);
                } else {
                    ts.push(rng.gen_range(-6..=6));
                }
                Polygon::new(ts.iter().map(|&t| Point::from_ints(t, 0)).collect()).ok()
            }
            // symmetric vertex multiset, shuffled adjacency
            5 => {
                let k = if rng.gen_bool(0.5) { 2 } else { 4 };
                let seeds: Vec<Point> = (0..rng.gen_range(1..=2)).map(|_| random_point(&mut rng, 5)).collect();
                let pts = orbit(&seeds, k, rng.gen_bool(0.5));
                (pts.len() >= 3).then(|| shuffled_cycle(&mut rng, &pts))
            }
            // mirror-symmetric vertex multiset, shuffled adjacency
            _ => {
                let mut pts = Vec::new();
                for _ in 0..rng.gen_range(2..=3) {
                    let p = random_point(&mut rng, 5);
                    pts.push(Point::new(-&p.x, p.y.clone()));
                    pts.push(p);
                }
                Some(shuffled_cycle(&mut rng, &pts))
            }
        };
        let Some(p) = p else { continue };
        if p.vertices().iter().all(|v| *v == p.vertices()[0]) {
            continue;
        }
        // repeated vertices make the chain orientation ambiguous; keep them out
        let mut sorted = p.vertices().to_vec();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != p.len() {
            continue;
        }
        let p = p.transform(&random_similarity(&mut rng, true));
        let slot = match p.classify() {
            Class::A => 0,
            Class::B => 1,
            Class::C => 2,
        };
        if buckets[slot].len() < per_class || needs_more_variety(&buckets, &p) {
            buckets[slot].push(p);
        }
    }
    buckets.into_iter().flatten().collect()
}

fn needs_more_variety(buckets: &[Vec<Polygon>; 3], p: &Polygon) -> bool {
    let all = buckets.iter().flatten();
    let (mut collinear, mut nonsimple) = (0, 0);
    for q in all {
        if crate::geom::all_collinear(q.vertices()) {
            collinear += 1;
        } else if !is_simple(q) {
            nonsimple += 1;
        }
    }
    let col = crate::geom::all_collinear(p.vertices());
    (col && collinear < 10) || (!col && !is_simple(p) && nonsimple < 10)
}
