//! Browser demo: exact series rendering, a numeric curve in γ, and the
//! verification summary. The plain functions in [`api`] do the work and are
//! tested natively; the `#[wasm_bindgen]` wrappers only convert errors.

pub mod api;

use wasm_bindgen::prelude::*;

fn js<T>(r: Result<T, String>) -> Result<T, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Renders a series; `style` is "text" or "latex".
#[wasm_bindgen(js_name = renderSeries)]
pub fn render_series(kind: &str, arg: &str, regime: &str, order: i32, style: &str) -> Result<String, JsError> {
    js(api::render_series(kind, arg, regime, order.into(), style))
}

/// JSON `{gamma: [...], series: [{regime, order, values: [...]}]}` with
/// `null` where a value is undefined.
#[wasm_bindgen(js_name = evaluateCurve)]
pub fn evaluate_curve(kind: &str, arg: &str, m: u32, gamma_max: f64, steps: u32) -> Result<String, JsError> {
    js(api::evaluate_curve(kind, arg, m, gamma_max, steps))
}

/// One line per check, then a summary line.
#[wasm_bindgen(js_name = verifySummary)]
pub fn verify_summary(scope: &str) -> Result<String, JsError> {
    js(api::verify_summary(scope))
}
