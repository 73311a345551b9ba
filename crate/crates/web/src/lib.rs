//! Browser bindings. The plain functions return JSON or text and are what
//! the wasm exports wrap.

use idealzeta::graphio::{GraphDocument, JsonInt};
use idealzeta::holomorphy::check;
use idealzeta::monodromy::eigenvalue_orders;
use idealzeta::{newton_polygon, BigInt, parse_ideal, principalise, topological_zeta, MonomialIdeal, ResolutionGraph};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest `dmax` accepted by [`check_range_text`].
pub const MAX_DMAX: u64 = 200;

fn resolve(ideal: &str) -> Result<(MonomialIdeal, ResolutionGraph), String> {
    let ideal = parse_ideal(ideal).map_err(|e| e.to_string())?;
    let g = principalise(&ideal).map_err(|e| e.to_string())?;
    Ok((ideal, g))
}

/// Newton polygon, resolution graph, eigenvalue orders and `Z_top^(1)`.
pub fn analyze_json(ideal: &str) -> Result<String, String> {
    let (ideal, g) = resolve(ideal)?;
    let np = newton_polygon(&ideal);
    let pair = |a: &BigInt, b: &BigInt| [JsonInt::from(a), JsonInt::from(b)];
    let generators: Vec<_> = ideal.generators().iter().map(|m| pair(&m.a, &m.b)).collect();
    let vertices: Vec<_> = np.vertices.iter().map(|m| pair(&m.a, &m.b)).collect();
    let edges: Vec<_> = np
        .compact_edges
        .iter()
        .map(|e| json!({"normal": pair(e.normal.p(), e.normal.q()), "length": JsonInt::from(&e.lattice_length)}))
        .collect();
    let orders: Vec<JsonInt> = eigenvalue_orders(&g).orders().iter().map(JsonInt::from).collect();
    let zeta = topological_zeta(&g, 1).map_err(|e| e.to_string())?;
    let value = json!({
        "ideal": ideal.to_string(),
        "h": pair(&ideal.h().a, &ideal.h().b),
        "generators": generators,
        "vertices": vertices,
        "compact_edges": edges,
        "graph": GraphDocument::from_graph(&g),
        "orders": orders,
        "zeta1": zeta.to_string(),
    });
    Ok(value.to_string())
}

/// `Z_top^(d)` in canonical and factored form, with its poles.
pub fn zeta_text(ideal: &str, d: u32) -> Result<String, String> {
    let (_, g) = resolve(ideal)?;
    let z = topological_zeta(&g, u64::from(d)).map_err(|e| e.to_string())?;
    let factored = z.factored().map_err(|e| e.to_string())?;
    let poles = z.poles().map_err(|e| e.to_string())?;
    let poles: Vec<String> = poles.iter().map(|(p, m)| format!("{p} (order {m})")).collect();
    Ok(format!(
        "Z_top^({d}) = {z}\nfactored: {factored}\npoles: {}",
        if poles.is_empty() { "none".into() } else { poles.join(", ") }
    ))
}

/// One verdict line per `d = 1..=dmax`.
pub fn check_range_text(ideal: &str, dmax: u32) -> Result<String, String> {
    let dmax = u64::from(dmax);
    if dmax == 0 || dmax > MAX_DMAX {
        return Err(format!("dmax must be between 1 and {MAX_DMAX}"));
    }
    let (_, g) = resolve(ideal)?;
    let mut lines = Vec::new();
    for d in 1..=dmax {
        lines.push(check(&g, d).map_err(|e| e.to_string())?.to_string());
    }
    Ok(lines.join("\n"))
}

#[wasm_bindgen]
pub fn analyze(ideal: &str) -> Result<String, JsError> {
    analyze_json(ideal).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn zeta(ideal: &str, d: u32) -> Result<String, JsError> {
    zeta_text(ideal, d).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn check_range(ideal: &str, dmax: u32) -> Result<String, JsError> {
    check_range_text(ideal, dmax).map_err(|e| JsError::new(&e))
}
