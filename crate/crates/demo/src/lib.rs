//! wasm-bindgen surface for the browser demo. Everything here is a thin
//! JSON envelope over the `aurea` library; all DOM and interaction logic
//! lives in the static page.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use aurea::constructions::ConstructionReport;
use aurea::report::{ErrorDocument, InputEcho, ReportDocument};
use aurea::svg::{emit_svg, figure_viewport};
use aurea::verify::{run_suite, CheckKind, SamplerConfig};
use aurea::{constructions, Point, Triangle};

/// Figure mapping data the page needs to place drag handles: world
/// coordinates map to figure coordinates as
/// x' = (x - min_x) * scale, y' = (max_y - y) * scale.
#[derive(Serialize)]
struct ViewInfo {
    min_x: f64,
    max_y: f64,
    scale: f64,
    width: f64,
    height: f64,
}

#[derive(Serialize)]
struct ExploreResult {
    report: ConstructionReport,
    svg: String,
    view: ViewInfo,
}

fn triangle_from(coords: [f64; 6]) -> aurea::Result<Triangle> {
    let a = Point::try_new(coords[0], coords[1])?;
    let b = Point::try_new(coords[2], coords[3])?;
    let c = Point::try_new(coords[4], coords[5])?;
    Triangle::new(a, b, c)
}

fn explore_impl(construction: u8, coords: [f64; 6]) -> aurea::Result<String> {
    let t = triangle_from(coords)?;
    let report = constructions::construct(&t, construction)?;
    let vp = figure_viewport(&report, &t);
    let result = ExploreResult {
        svg: emit_svg(&report, &t),
        view: ViewInfo {
            min_x: vp.min_x,
            max_y: vp.max_y,
            scale: vp.scale,
            width: vp.width,
            height: vp.height,
        },
        report,
    };
    Ok(serde_json::to_string(&result).expect("demo payload serializes"))
}

fn construct_document_impl(construction: u8, coords: [f64; 6]) -> aurea::Result<String> {
    let t = triangle_from(coords)?;
    let report = constructions::construct(&t, construction)?;
    let mut input = InputEcho::for_triangle(&t);
    input.construction = Some(construction);
    Ok(ReportDocument::construction(input, report).to_json())
}

fn suite_impl(seed: u32, count: u32, checks: &str) -> Result<String, String> {
    let kinds: Vec<CheckKind> = if checks.trim().is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        checks
            .split(',')
            .map(|name| CheckKind::parse(name.trim()).ok_or_else(|| format!("unknown check '{name}'")))
            .collect::<Result<_, _>>()?
    };
    let cfg = SamplerConfig::new(seed as u64, count as u64);
    let summary = run_suite(&cfg, &kinds);
    let input = InputEcho {
        seed: Some(seed as u64),
        count: Some(count as u64),
        ..Default::default()
    };
    Ok(ReportDocument::suite(input, summary).to_json())
}

fn error_json(err: &aurea::Error) -> String {
    ErrorDocument::from_error(err).to_json()
}

/// Run a construction and return `{ report, svg, view }` as JSON.
#[wasm_bindgen]
pub fn explore(construction: u8, ax: f64, ay: f64, bx: f64, by: f64, cx: f64, cy: f64) -> Result<String, JsError> {
    explore_impl(construction, [ax, ay, bx, by, cx, cy]).map_err(|e| JsError::new(&error_json(&e)))
}

/// Full report document for the current triangle, as the CLI would emit it.
#[wasm_bindgen]
pub fn construct_document(construction: u8, ax: f64, ay: f64, bx: f64, by: f64, cx: f64, cy: f64) -> Result<String, JsError> {
    construct_document_impl(construction, [ax, ay, bx, by, cx, cy])
        .map_err(|e| JsError::new(&error_json(&e)))
}

/// Run the seeded verification suite in the browser. `checks` is a
/// comma-separated subset (empty string = all checks).
#[wasm_bindgen]
pub fn verify_suite(seed: u32, count: u32, checks: &str) -> Result<String, JsError> {
    suite_impl(seed, count, checks).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const COORDS: [f64; 6] = [0.4, 2.1, 0.0, 0.0, 3.0, 0.2];

    #[test]
    fn explore_payload_matches_library() {
        let json = explore_impl(1, COORDS).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let ratio = value["report"]["ratio_value"].as_f64().unwrap();
        let t = triangle_from(COORDS).unwrap();
        let direct = constructions::construct1(&t).unwrap();
        assert_eq!(ratio, direct.ratio_value);
        assert!(value["svg"].as_str().unwrap().starts_with("<?xml"));
        assert!(value["view"]["scale"].as_f64().unwrap() > 0.0);
    }

    #[test]
    fn view_mapping_inverts() {
        let json = explore_impl(3, COORDS).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let (min_x, max_y, scale) = (
            value["view"]["min_x"].as_f64().unwrap(),
            value["view"]["max_y"].as_f64().unwrap(),
            value["view"]["scale"].as_f64().unwrap(),
        );
        // vertex A maps into the figure and back
        let fig_x = (COORDS[0] - min_x) * scale;
        let fig_y = (max_y - COORDS[1]) * scale;
        assert!(((min_x + fig_x / scale) - COORDS[0]).abs() < 1e-12);
        assert!(((max_y - fig_y / scale) - COORDS[1]).abs() < 1e-12);
    }

    #[test]
    fn degenerate_triangle_reports_error() {
        let err = explore_impl(1, [0.0, 0.0, 1.0, 0.0, 2.0, 0.0]).unwrap_err();
        assert_eq!(err, aurea::Error::DegenerateTriangle);
    }

    #[test]
    fn suite_runs_and_passes() {
        let json = suite_impl(42, 30, "lemma1,construct4").unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["summary"]["pass"], true);
        assert_eq!(value["summary"]["checks"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn suite_rejects_unknown_check() {
        assert!(suite_impl(1, 5, "nope").is_err());
    }

    #[test]
    fn document_matches_cli_shape() {
        let json = construct_document_impl(4, COORDS).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["schema_version"], "1");
        assert_eq!(value["kind"], "construction");
        assert_eq!(value["input"]["construction"], 4);
    }
}
