use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn data(name: &str) -> String {
    root().join("data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcenter")).args(args).output().expect("binary runs")
}

fn report(name: &str) -> serde_json::Value {
    let out = run(&["report", &data(name)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("symcenter-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn report_isosceles() {
    let r = report("isosceles.json");
    assert_eq!(r["class"], "B");
    assert_eq!(r["centers"]["X"], serde_json::json!(["0", "2"]));
    assert_eq!(r["flags"]["triple_collinear"], true);
    assert_eq!(r["flags"]["X_eq_centroid"], false);
}

#[test]
fn report_classes() {
    assert_eq!(report("square.json")["class"], "A");
    assert_eq!(report("square.json")["symmetry"]["group"], "D4 about (1, 1)");
    assert_eq!(report("scalene.json")["class"], "C");
    assert_eq!(report("mirror_vertices_hexagon.json")["class"], "C");
    assert_eq!(report("collinear_polygon.json")["centers"]["X"], serde_json::json!(["3", "0"]));
    assert!(report("labeled_square.json").get("flags").is_none());
}

#[test]
fn precision_controls_digits() {
    let out = run(&["report", &data("cyclic_demo.json"), "--precision", "4"]);
    let r: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["centers"]["cyclic"], serde_json::json!(["0.8944", "0.4472"]));
}

#[test]
fn exit_codes() {
    let bad = temp("bad.json");
    std::fs::write(&bad, "{\"kind\": \"polygon\", \"points\": [[0, 0]").unwrap();
    assert_eq!(run(&["report", bad.to_str().unwrap()]).status.code(), Some(2));
    let short = temp("short.json");
    std::fs::write(&short, r#"{"kind": "polygon", "points": [[0, 0], [1, 1]]}"#).unwrap();
    assert_eq!(run(&["report", short.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["report", &data("missing.json")]).status.code(), Some(4));
    let out = run(&["report", &data("repeated_vertices.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("contract violation"));
    assert_eq!(run(&["svg", &data("scalene.json"), "-o", "/nonexistent/dir/x.svg"]).status.code(), Some(4));
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", &data("scalene.json"), "--suite", "iff"]).status.code(), Some(2));
}

fn verify(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["failures"], serde_json::json!([]));
    r
}

#[test]
fn verify_suites_pass() {
    let r = verify(&["verify", "--suite", "lemma-aux", "--max", "10"]);
    assert!(r["trials"].as_u64().unwrap() > 1000);
    verify(&["verify", "--suite", "theorem", "--trials", "50", "--seed", "7"]);
    verify(&["verify", "--suite", "iff"]);
    verify(&["verify", "--suite", "triangles"]);
    verify(&["verify", "--suite", "equivariance", "--objects", "3", "--trials", "10"]);
}

#[test]
fn verify_scene_files() {
    for name in ["scalene.json", "isosceles.json", "square.json", "cyclic_demo.json", "labeled_square.json"] {
        verify(&["verify", &data(name), "--trials", "10"]);
    }
}

fn svg_of(name: &str, extra: &[&str]) -> String {
    let out = temp(&name.replace(".json", ".svg"));
    let d = data(name);
    let mut args = vec!["svg", &d, "-o", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::read_to_string(out).unwrap()
}

#[test]
fn svg_matches_golden_files() {
    for name in ["cyclic_demo", "scalene", "labeled_square"] {
        let got = svg_of(&format!("{name}.json"), &[]);
        let want = std::fs::read_to_string(root().join(format!("crates/cli/tests/golden/{name}.svg"))).unwrap();
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn svg_width() {
    assert!(svg_of("square.json", &[]).contains(r#"width="800" height="800""#));
    assert!(svg_of("square.json", &["--width", "300"]).contains(r#"width="300" height="300""#));
}
