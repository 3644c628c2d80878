//! Browser bindings. Every export takes a spec string and returns a JSON
//! document, so the page stays plain JavaScript. The impl functions return
//! `Result<String, String>` and are tested on the host; the `wasm_bindgen`
//! wrappers only translate errors.

use wasm_bindgen::prelude::wasm_bindgen;
use wasm_bindgen::JsValue;

use inring::metric::{metric_dimension_exact, predicted_metric_dimension, WorkBudget};
use inring::strong::{
    build_srg_definitional, independence_number, predicted_strong_metric_dimension,
    strong_resolving_witness,
};
use inring::{Error, IdealGraph, RingSpec};

/// Graphs above this size are refused outright; the page draws circles, and
/// a few hundred vertices is already unreadable.
const MAX_VERTICES: u64 = 400;

/// Work cap per exact search. Small enough to keep the tab responsive; the
/// analysis reports null for anything it could not finish.
const ANALYZE_BUDGET: u64 = 20_000_000;

fn parse(text: &str) -> Result<RingSpec, String> {
    RingSpec::parse_with_max_ideals(text.trim(), MAX_VERTICES + 2)
        .map_err(|e| format!("bad spec `{}`: {e}", text.trim()))
}

fn analyze_impl(text: &str) -> Result<String, String> {
    let spec = parse(text)?;
    let graph = IdealGraph::build(&spec);
    let dist = graph.distances();
    let connected = graph.vertex_count() > 0 && graph.is_connected();

    let mut diameter = None;
    let mut dim = None;
    let mut basis: Vec<String> = Vec::new();
    let mut sdim = None;
    let mut witness: Vec<String> = Vec::new();
    let mut srg_vertices = None;
    let mut srg_edges = None;

    if connected {
        diameter = graph.diameter(&dist).ok();

        let mut budget = WorkBudget::new(ANALYZE_BUDGET);
        if let Ok(found) = metric_dimension_exact(&graph, &dist, &mut budget) {
            basis = found
                .basis
                .iter()
                .map(|&i| graph.vertex(i).render(&spec, " x "))
                .collect();
            dim = Some(found.dimension);
        }

        if let Ok(srg) = build_srg_definitional(&graph, &dist) {
            srg_vertices = Some(srg.vertex_count());
            srg_edges = Some(srg.edge_count());
            let mut budget = WorkBudget::new(ANALYZE_BUDGET);
            if let Ok(mis) = independence_number(&srg, &mut budget) {
                sdim = Some(srg.vertex_count() - mis.size);
                witness = strong_resolving_witness(&srg, &mis)
                    .iter()
                    .map(|&i| graph.vertex(i).render(&spec, " x "))
                    .collect();
            }
        }
    }

    let scoped = |r: Result<u64, Error>| r.ok();
    Ok(serde_json::json!({
        "spec_display": spec.display(),
        "vertices": graph.vertex_count(),
        "edges": graph.edge_count(),
        "connected": connected,
        "diameter": diameter,
        "dim": dim,
        "dim_predicted": scoped(predicted_metric_dimension(&spec)),
        "basis": basis,
        "sdim": sdim,
        "sdim_predicted": scoped(predicted_strong_metric_dimension(&spec)),
        "witness": witness,
        "srg_vertices": srg_vertices,
        "srg_edges": srg_edges,
    })
    .to_string())
}

fn graph_json_impl(text: &str) -> Result<String, String> {
    let spec = parse(text)?;
    Ok(IdealGraph::build(&spec).to_json())
}

fn srg_json_impl(text: &str) -> Result<String, String> {
    let spec = parse(text)?;
    let graph = IdealGraph::build(&spec);
    let dist = graph.distances();
    build_srg_definitional(&graph, &dist)
        .map(|srg| srg.to_json())
        .map_err(|e| e.to_string())
}

/// Full analysis of one spec: counts, diameter, both dimensions with
/// witnesses, and the closed-form predictions (null when out of scope).
#[wasm_bindgen]
pub fn analyze(spec: &str) -> Result<String, JsValue> {
    analyze_impl(spec).map_err(|e| JsValue::from_str(&e))
}

/// The inclusion ideal graph as JSON: vertex labels and an edge list.
#[wasm_bindgen]
pub fn graph_json(spec: &str) -> Result<String, JsValue> {
    graph_json_impl(spec).map_err(|e| JsValue::from_str(&e))
}

/// The strong resolving graph as JSON. Errors on disconnected specs.
#[wasm_bindgen]
pub fn srg_json(spec: &str) -> Result<String, JsValue> {
    srg_json_impl(spec).map_err(|e| JsValue::from_str(&e))
}
