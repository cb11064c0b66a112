//! Acceptance gate: one pass/fail line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use symcenter::angle::{exact_pair, DEFAULT_ANGLE_TOL};
use symcenter::corpus::polygon_corpus;
use symcenter::cyclic::{b_center, phi, CyclicCenter, CyclicConfiguration};
use symcenter::geom::all_collinear;
use symcenter::multiset_centers::x_center_multiset;
use symcenter::oracle::{
    equivariance_suite, first_step_iff, lemma_aux_suite, oracle_suite, theorem_suite, triangles,
    triple_independence_iff, x_centroid_iff, TrialReport,
};
use symcenter::polygon_centers::{chain_code, chain_orientation, format_chain_code_tex, x_center_polygon, PolarPolygon};
use symcenter::scene::is_simple;
use symcenter::{Angle, Class, Multiset, Point, Polygon, Symmetric};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_report(r: &TrialReport, limit: Option<Duration>) -> Outcome {
    let slow = limit.is_some_and(|l| r.elapsed > l);
    let mut detail = format!("{} trials, {} failures, {:.2?}", r.trials, r.failures.len(), r.elapsed);
    if let Some(l) = limit {
        detail.push_str(&format!(" (limit {l:?})"));
    }
    for f in r.failures.iter().take(3) {
        detail.push_str(&format!("\n    failure: {} | expected {} | got {}", f.input, f.expected, f.got));
    }
    Outcome {
        pass: r.passed() && !slow,
        detail,
    }
}

fn first_step() -> Outcome {
    from_report(&first_step_iff(24, 6), Some(Duration::from_secs(60)))
}

fn equivariance() -> Outcome {
    let r = equivariance_suite(20, 100, 2024, 1e-6);
    let mut o = from_report(&r, Some(Duration::from_secs(120)));
    o.pass &= r.trials == 9 * 20 * 100;
    o
}

fn x_equals_centroid() -> Outcome {
    from_report(&x_centroid_iff(11), None)
}

fn triple_independence() -> Outcome {
    let polys = polygon_corpus(11 + 3, 40);
    let count = |c: Class| polys.iter().filter(|p| p.classify() == c).count();
    let collinear = polys.iter().filter(|p| all_collinear(p.vertices())).count();
    let nonsimple = polys.iter().filter(|p| !all_collinear(p.vertices()) && !is_simple(p)).count();
    let mut o = from_report(&triple_independence_iff(11), None);
    let (a, b, c) = (count(Class::A), count(Class::B), count(Class::C));
    o.pass &= a >= 40 && b >= 40 && c >= 40 && collinear >= 5 && nonsimple >= 5;
    o.detail.push_str(&format!("; polygons A/B/C {a}/{b}/{c}, {collinear} collinear, {nonsimple} non-simple"));
    o
}

fn theorem() -> Outcome {
    from_report(&theorem_suite(200, 7, 1e-9), None)
}

fn lemma_aux() -> Outcome {
    from_report(&lemma_aux_suite(10, 5), Some(Duration::from_secs(30)))
}

fn oracle_agreement() -> Outcome {
    from_report(&oracle_suite(500, 99), None)
}

fn triangle_demos() -> Outcome {
    let mut o = from_report(&triangles::triangle_demo_suite(), None);
    let n = triangles::triangle_grid().len();
    o.pass &= n >= 1000;
    o.detail.push_str(&format!("; {n} grid triangles"));
    o
}

fn turns_of(c: &CyclicCenter) -> Option<(i64, i64)> {
    match c {
        CyclicCenter::Center => None,
        CyclicCenter::OnCircle(p) => exact_pair(&p.theta),
    }
}

fn traced_fixtures() -> Outcome {
    let mut bad = Vec::new();
    let cfg = |t: &[(i64, i64)]| CyclicConfiguration::unit_turns(t).unwrap();

    let b = b_center(&cfg(&[(0, 1), (1, 3), (2, 3), (1, 12), (7, 12)])).unwrap();
    if turns_of(&b) != Some((5, 6)) {
        bad.push(format!("triangle plus two points: {:?}", turns_of(&b)));
    }
    let b = b_center(&cfg(&[(0, 1), (1, 4), (1, 2)])).unwrap();
    if turns_of(&b) != Some((1, 4)) {
        bad.push(format!("three quarter points: {:?}", turns_of(&b)));
    }
    let out = phi(&cfg(&[(0, 1), (1, 10), (1, 2), (3, 5)]), 2).unwrap();
    let got: Vec<_> = out.points().iter().map(|p| exact_pair(&p.theta)).collect();
    if got != vec![Some((1, 20)), Some((11, 20))] {
        bad.push(format!("regular-polygon map: {got:?}"));
    }
    let m = Multiset::new(vec![Point::from_ints(1, 0), Point::from_ints(-1, 0), Point::from_ints(0, 2)]).unwrap();
    let x = x_center_multiset(&m).unwrap();
    if x.exact_point() != Some(&Point::from_ints(0, 2)) {
        bad.push(format!("isosceles x center: {x}"));
    }
    let p = Polygon::new(vec![Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(3, 0)]).unwrap();
    let x = x_center_polygon(&p).unwrap();
    if x.exact_point() != Some(&Point::from_ints(3, 0)) {
        bad.push(format!("collinear 3-gon: {x}"));
    }
    let at = |k: i64| (1, Some(Angle::turns_ratio(k - 1, 5)));
    let star = PolarPolygon::from_polar(&[at(1), at(3), at(2), at(5), at(4)], DEFAULT_ANGLE_TOL).unwrap();
    let (pos, _) = chain_orientation(&star, 0).unwrap();
    let code = format_chain_code_tex(&chain_code(&star, &pos, true));
    let expected = r"((1,2\frac{2\pi}{5}),(1,4\frac{2\pi}{5}),(1,3\frac{2\pi}{5}),(1,4\frac{2\pi}{5}),(1,2\frac{2\pi}{5}))";
    if code != expected {
        bad.push(format!("pentagram code: {code}"));
    }
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            "6 fixtures reproduced exactly".into()
        } else {
            bad.join("; ")
        },
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("cyclic center is the circle center exactly on symmetric grid subsets", first_step),
        ("equivariance of all nine centers", equivariance),
        ("x center equals the centroid exactly on class A", x_equals_centroid),
        ("centroid, x and y independent exactly on class C", triple_independence),
        ("affine coefficients and fixed-set containment", theorem),
        ("union of two regular polygons", lemma_aux),
        ("symmetry groups agree with brute force", oracle_agreement),
        ("classical triangle coincidences", triangle_demos),
        ("traced fixtures", traced_fixtures),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += !o.pass as usize;
        println!("criterion {}: {} - {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of 9 passed in {:.1?}", 9 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
