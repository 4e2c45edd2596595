//! Three operations for the static page in `www/`, each returning JSON.
//!
//! Build with `cargo build -p subword-demo --target wasm32-unknown-unknown --release`
//! and run `wasm-bindgen --target web` on the output (see `www/index.html`).

use std::time::Duration;

use serde_json::json;
use subword_core::coxeter::{Budget, CoxeterSystem};
use subword_core::polyring::parse_rational;
use subword_core::redgraph::{signs, Bipartition, Minor, RedGraph, SignKind, TNormalization};
use subword_core::tensors::{bcl_parameter_tensor, cyclic_b2_tensor, model_det, theorem_b, BclTensor, ParameterTensor};
use subword_core::words::Word;
use wasm_bindgen::prelude::*;

// small enough to keep a browser tab responsive
const BUDGET: Budget = Budget {
    max_items: 2_000_000,
    max_time: Duration::from_secs(20),
};

fn err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

/// Word count, abelian vectors and commutation classes of `w₀`.
pub fn spectrum_json(ty: &str) -> Result<String, String> {
    let sys: CoxeterSystem = ty.parse().map_err(|e| format!("{e}"))?;
    let w0 = sys.longest_element();
    let spec = sys.abelian_spectrum(&w0, BUDGET).map_err(|e| e.to_string())?;
    let vectors: Vec<_> = spec
        .vectors()
        .iter()
        .map(|v| json!({"vector": v.to_string(), "words": spec.counts[v].to_string()}))
        .collect();
    Ok(json!({
        "type": sys.to_string(),
        "length": sys.longest_length(),
        "words": spec.word_count().to_string(),
        "min": spec.mu().to_string(),
        "max": spec.coordinatewise_max().to_string(),
        "vectors": vectors,
    })
    .to_string())
}

/// A sign function on the graph of `w₀`, its minor, and the minor's DOT.
pub fn sign_graph_json(ty: &str, kind: &str, minor: &str) -> Result<String, String> {
    let sys: CoxeterSystem = ty.parse().map_err(|e| format!("{e}"))?;
    let kind: SignKind = kind.parse().map_err(|e| format!("{e}"))?;
    let minor: Minor = minor.parse().map_err(|e| format!("{e}"))?;
    let g = RedGraph::longest(&sys, BUDGET).map_err(|e| e.to_string())?;
    let sa = signs(&sys, &g, kind, TNormalization::default()).map_err(|e| e.to_string())?;
    let m = g.minor(&sys, minor);
    let table: Vec<_> = sa
        .signs
        .iter()
        .map(|(w, s)| json!({"word": w.format(sys.rank()), "sign": s}))
        .collect();
    Ok(json!({
        "vertices": m.num_vertices(),
        "edges": m.edges().len(),
        "bipartite": matches!(m.bipartition(), Bipartition::Coloring(_)),
        "signs": table,
        "dot": m.to_dot(&format!("{sys} {minor:?}"), Some(&sa)),
    })
    .to_string())
}

fn named_tensor(name: &str, m: Option<&str>) -> Result<ParameterTensor, String> {
    if name == "model4" {
        return Ok(cyclic_b2_tensor());
    }
    let which: BclTensor = name.parse().map_err(|e| format!("{e}"))?;
    let m = m.filter(|s| !s.trim().is_empty()).map(parse_rational).transpose().map_err(|e| e.to_string())?;
    Ok(bcl_parameter_tensor(which, m.as_ref()))
}

/// The factored determinant of a model matrix, checked against direct expansion.
pub fn determinant_json(word: &str, tensor: &str, m: Option<String>) -> Result<String, String> {
    let v: Word = word.parse().map_err(|e| format!("{e}"))?;
    let p = named_tensor(tensor, m.as_deref())?;
    let cert = theorem_b(&v, &p).map_err(|e| e.to_string())?;
    let expanded = model_det(&v, &p).map_err(|e| e.to_string())?;
    let mut doc = cert.to_json();
    doc["agrees"] = json!(expanded == cert.determinant());
    Ok(doc.to_string())
}

#[wasm_bindgen]
pub fn spectrum(ty: &str) -> Result<String, JsError> {
    spectrum_json(ty).map_err(err)
}

#[wasm_bindgen]
pub fn sign_graph(ty: &str, kind: &str, minor: &str) -> Result<String, JsError> {
    sign_graph_json(ty, kind, minor).map_err(err)
}

#[wasm_bindgen]
pub fn determinant(word: &str, tensor: &str, m: Option<String>) -> Result<String, JsError> {
    determinant_json(word, tensor, m).map_err(err)
}
