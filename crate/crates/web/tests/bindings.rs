use symcenter_web::{analyze_scene, equivariance_check, render_scene};

const ISOSCELES: &str = r#"{"kind": "multiset", "points": [[1, 0], [-1, 0], [0, 2]]}"#;

#[test]
fn analyze_reports_class_and_centers() {
    let json = analyze_scene(ISOSCELES, 6).unwrap();
    assert!(json.contains(r#""class": "B""#));
    assert!(json.contains(r#""triple_collinear": true"#));
}

#[test]
fn render_draws_every_point() {
    let svg = render_scene(ISOSCELES, 400).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains(r#"width="400""#));
    assert_eq!(svg.matches(r#"class="input""#).count(), 3);
}

#[test]
fn equivariance_passes_on_a_polygon() {
    let json = equivariance_check(r#"{"kind": "polygon", "points": [[0, 0], [3, 0], [1, 1], [0, 2]]}"#, 5, 3).unwrap();
    assert!(json.contains(r#""failures": []"#), "{json}");
    assert!(json.contains("x-polygon"));
}

#[test]
fn bad_scenes_are_errors() {
    assert!(analyze_scene("{", 6).is_err());
    assert!(render_scene(r#"{"kind": "polygon", "points": [[0, 0]]}"#, 400).is_err());
}
