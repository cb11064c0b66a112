//! wasm-bindgen bindings for the browser demo in `www/`. Each export takes a
//! scene as JSON text, in the same format the CLI reads.

use symcenter::oracle::{check_equivariance, CenterId, TrialReport};
use symcenter::report::analyze;
use symcenter::scene::{SceneFile, Shape};
use symcenter::svg::render_svg;
use symcenter::DEFAULT_ANGLE_TOL;
use wasm_bindgen::prelude::*;

fn shape(scene: &str) -> Result<Shape, String> {
    SceneFile::parse(scene).and_then(|f| f.shape()).map_err(|e| e.to_string())
}

/// Symmetry group, class, fixed set and centers as pretty JSON.
pub fn analyze_scene(scene: &str, digits: usize) -> Result<String, String> {
    let a = analyze(&shape(scene)?, DEFAULT_ANGLE_TOL).map_err(|e| e.to_string())?;
    Ok(a.report(digits).to_json())
}

pub fn render_scene(scene: &str, width: u32) -> Result<String, String> {
    let a = analyze(&shape(scene)?, DEFAULT_ANGLE_TOL).map_err(|e| e.to_string())?;
    Ok(render_svg(&a, width))
}

/// Applies `trials` random similarities and compares every center defined on
/// the scene against the transformed original.
pub fn equivariance_check(scene: &str, trials: usize, seed: u64) -> Result<String, String> {
    let s = shape(scene)?;
    let mut report = TrialReport::new("equivariance", seed);
    for id in CenterId::ALL {
        if id.evaluate(&s).is_ok() {
            report.absorb(check_equivariance(id, &s, trials, seed, 1e-6));
            report.notes.push(id.name().to_string());
        }
    }
    Ok(report.to_json())
}

#[wasm_bindgen(js_name = analyzeScene)]
pub fn analyze_scene_js(scene: &str, digits: usize) -> Result<String, JsValue> {
    analyze_scene(scene, digits).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = renderScene)]
pub fn render_scene_js(scene: &str, width: u32) -> Result<String, JsValue> {
    render_scene(scene, width).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = equivarianceCheck)]
pub fn equivariance_check_js(scene: &str, trials: usize, seed: u32) -> Result<String, JsValue> {
    equivariance_check(scene, trials, seed as u64).map_err(|e| JsValue::from_str(&e))
}
