//! Browser bindings for the fortress demo page.
//!
//! Every export takes a graph as graph6 or edge-list text and returns a
//! JSON string. The plain functions in [`api`] carry the logic so they can
//! be tested natively; the `#[wasm_bindgen]` wrappers only convert errors.

use wasm_bindgen::prelude::*;

pub mod api;
pub mod layout;

fn js(r: fortress::Result<String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

/// Classification, minimal forts and a drawing layout.
#[wasm_bindgen]
pub fn analyze(graph: &str) -> Result<String, JsValue> {
    js(api::analyze(graph))
}

/// Forces fired from the given blue set, in order.
#[wasm_bindgen]
pub fn force(graph: &str, blue: &[u32]) -> Result<String, JsValue> {
    js(api::force(graph, blue))
}

/// Minimal fort of a tree built from two leaves or a named construction.
#[wasm_bindgen]
pub fn construct(graph: &str, kind: &str, a: u32, b: u32) -> Result<String, JsValue> {
    js(api::construct(graph, kind, a, b))
}

/// graph6 text of a named family member.
#[wasm_bindgen]
pub fn family(name: &str, n: u32, legs: &str) -> Result<String, JsValue> {
    js(api::family(name, n, legs))
}
