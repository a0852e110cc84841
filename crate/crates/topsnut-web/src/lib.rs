//! WebAssembly bindings behind `static/index.html`. Each export takes and
//! returns strings so the page needs no glue beyond the generated module.

use topsnut::construct::caterpillar_set_ordered_graceful;
use topsnut::encode::{self, ColumnOrder, Traversal};
use topsnut::labelling::{induce_edge_labels, EdgeRule};
use topsnut::{verify, Graph, Kind, LabelledGraph};
use wasm_bindgen::prelude::*;

fn verify_text(kind: &str, graph_json: &str) -> Result<String, String> {
    let kind = Kind::parse(kind).map_err(|e| e.to_string())?;
    let lg = encode::deserialize(graph_json).map_err(|e| e.to_string())?;
    let report = verify::verify(&lg.graph, &lg.labelling, &kind).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string_pretty(&report).expect("report serialises"))
}

/// Leaf counts along the spine, e.g. `2,0,3`.
fn caterpillar_text(blocks: &str) -> Result<String, String> {
    let blocks: Vec<usize> = blocks
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| format!("not a leaf count: {s:?}")))
        .collect::<Result<_, _>>()?;
    if blocks.is_empty() || blocks.len() + blocks.iter().sum::<usize>() > 200 {
        return Err("give between 1 and 200 vertices".into());
    }
    let t = Graph::caterpillar(&blocks);
    let built = caterpillar_set_ordered_graceful(&t).map_err(|e| e.to_string())?;
    let f = induce_edge_labels(&t, &built.labelling, EdgeRule::Difference).map_err(|e| e.to_string())?;
    let lg = LabelledGraph::new(t, f);
    let m = encode::to_matrix(&lg, ColumnOrder::ByEdgeLabel).map_err(|e| e.to_string())?;
    let password = encode::matrix_serpentine_text(&m, Traversal::ColumnSerpentine).text;
    let out = serde_json::json!({
        "graph": serde_json::from_str::<serde_json::Value>(&encode::serialize(&lg)).expect("own output parses"),
        "password": password,
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn verify_labelling(kind: &str, graph_json: &str) -> Result<String, JsError> {
    verify_text(kind, graph_json).map_err(|e| JsError::new(&e))
}

/// Set-ordered graceful caterpillar with its matrix password, as JSON
/// `{graph, password}`.
#[wasm_bindgen]
pub fn label_caterpillar(blocks: &str) -> Result<String, JsError> {
    caterpillar_text(blocks).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn group_op(i: usize, j: usize, zero: usize, n: usize) -> Result<usize, JsError> {
    topsnut::groups::group_op(i, j, zero, n).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn kind_names() -> String {
    let names: Vec<String> = Kind::simple().iter().map(Kind::name).collect();
    names.join(",")
}
