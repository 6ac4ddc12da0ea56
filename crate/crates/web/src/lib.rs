//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every export takes and returns JSON text. The `*_json` functions hold the
//! logic and run natively as well, which is how they are tested.

use dehn::coloring::{dehn_count_linear, structure_count, ColoringKind};
use dehn::goeritz::{matrix_from_json_str, matrix_to_json};
use dehn::intlattice::GroupDescriptor;
use dehn::shading::Shade;
use dehn::{invariant_factors, realize, smith_normal_form, ColoringReport, RealizationSpec, ShadedDiagram};
use num_bigint::BigUint;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const MODULI: std::ops::RangeInclusive<u64> = 2..=9;

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(|v| Value::String(v.to_string())).collect())
}

fn groups(report: &ColoringReport) -> Value {
    json!({
        "dehn": report.dehn.to_string(),
        "fox": report.fox.to_string(),
        "integer": GroupDescriptor::from_factors(&report.phi, false).integer_group(),
    })
}

/// Regions, Goeritz matrix, invariant factors and coloring counts of a
/// diagram under shading 0 or 1.
pub fn analyze_json(code: &str, shading: usize) -> Result<String, String> {
    let sd = ShadedDiagram::parse(code, shading).map_err(|e| e.to_string())?;
    let g = sd.goeritz();
    let report = sd.report();
    let counts: Vec<Value> = MODULI
        .map(|m| {
            let mb = BigUint::from(m);
            let linear = dehn_count_linear(&sd.regions, m).map(|c| c.to_string()).unwrap_or_default();
            json!({
                "m": m.to_string(),
                "dehn": structure_count(&report, &mb, ColoringKind::Dehn).to_string(),
                "fox": structure_count(&report, &mb, ColoringKind::Fox).to_string(),
                "linear": linear,
            })
        })
        .collect();
    let out = json!({
        "diagram": sd.diagram.to_string(),
        "crossings": sd.diagram.crossing_count().to_string(),
        "regions": sd.regions.region_count().to_string(),
        "shaded": strings(sd.shading.regions_with(Shade::Shaded)),
        "unshaded": strings(&g.unshaded_regions),
        "beta_s": g.beta_s.to_string(),
        "matrix": matrix_to_json(&g.matrix),
        "adjusted": matrix_to_json(&g.adjusted),
        "phi": strings(&report.phi),
        "groups": groups(&report),
        "counts": counts,
    });
    Ok(out.to_string())
}

/// Diagram realizing a comma-separated list of factors.
pub fn realize_json(phis: &str) -> Result<String, String> {
    let spec = RealizationSpec::parse(phis).map_err(|e| format!("factor list: {e}"))?;
    let r = realize(&spec);
    let phi = invariant_factors(&r.goeritz.adjusted);
    let out = json!({
        "diagram": r.diagram.to_string(),
        "crossings": r.diagram.crossing_count().to_string(),
        "shading": r.shading.to_string(),
        "adjusted": matrix_to_json(&r.goeritz.adjusted),
        "phi": strings(&phi),
        "groups": groups(&ColoringReport::from_factors(phi)),
    });
    Ok(out.to_string())
}

/// Smith normal form of a matrix given as JSON rows.
pub fn smith_json(matrix: &str) -> Result<String, String> {
    let m = matrix_from_json_str(matrix).map_err(|e| e.to_string())?;
    let r = smith_normal_form(&m);
    let out = json!({
        "phi": strings(&r.phi),
        "rank": r.rank.to_string(),
        "u1": matrix_to_json(&r.u1),
        "u2": matrix_to_json(&r.u2),
        "groups": groups(&ColoringReport::from_factors(r.phi)),
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn analyze(code: &str, shading: usize) -> Result<String, JsValue> {
    analyze_json(code, shading).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = realizeFactors)]
pub fn realize_factors(phis: &str) -> Result<String, JsValue> {
    realize_json(phis).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = smithForm)]
pub fn smith_form(matrix: &str) -> Result<String, JsValue> {
    smith_json(matrix).map_err(|e| JsValue::from_str(&e))
}
