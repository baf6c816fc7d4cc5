use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use cubelab::generators::{cycle_permutation_graph, papillon, Permutation};
use cubelab::io::to_graph6;
use cubelab::matchings::{
    constructive_pmh_extension, enumerate_perfect_matchings, is_class_one, is_e2f, is_pmh, pmh_extension,
};
use cubelab::structure::{girth, is_bipartite, odd_girth};

const MAX_DEMO_SUM: usize = 8;

fn params(r: usize, l: usize) -> Result<(usize, usize), String> {
    if r == 0 || l == 0 || r + l > MAX_DEMO_SUM {
        return Err(format!("need 1 <= r, l and r + l <= {MAX_DEMO_SUM}"));
    }
    Ok((r.min(l), r.max(l)))
}

pub fn layout_value(r: usize, l: usize) -> Result<Value, String> {
    let (r, l) = params(r, l)?;
    let (g, layout) = papillon(r, l);
    let kind = |e| {
        if layout.outer_edges().contains(&e) {
            "outer"
        } else if layout.spokes().contains(&e) {
            "spoke"
        } else {
            "inner"
        }
    };
    let edges: Vec<Value> = (0..g.size())
        .map(|e| json!({ "ends": g.endpoints(e), "label": layout.edge_label(&g, e), "kind": kind(e) }))
        .collect();
    Ok(json!({
        "r": r,
        "l": l,
        "t": layout.params().cycle_len(),
        "labels": (0..g.order()).map(|v| layout.label(v)).collect::<Vec<_>>(),
        "edges": edges,
        "cut": layout.principal_cut(),
        "matchings": enumerate_perfect_matchings(&g).len(),
        "odd_girth": odd_girth(&g).length(),
    }))
}

/// Perfect matching number `index` of papillon(r, l), with the first
/// Hamiltonian extension found by search and, where it applies, the one
/// built by the explicit construction.
pub fn extension_value(r: usize, l: usize, index: usize) -> Result<Value, String> {
    let (r, l) = params(r, l)?;
    let (g, layout) = papillon(r, l);
    let pms = enumerate_perfect_matchings(&g);
    let m = pms.get(index).ok_or_else(|| format!("only {} perfect matchings", pms.len()))?;
    let searched = pmh_extension(&g, m).map_err(|e| e.to_string())?;
    let constructive = if r == l && r % 2 == 0 {
        match constructive_pmh_extension(&g, &layout, m) {
            Ok(ext) => json!({ "case": ext.case, "cycle": ext.certificate.cycle }),
            Err(e) => json!({ "error": e.to_string() }),
        }
    } else {
        Value::Null
    };
    Ok(json!({
        "index": index,
        "matching": m.edges(),
        "search": searched.map(|c| c.cycle),
        "constructive": constructive,
    }))
}

pub fn permutation_value(perm: &str, t: usize) -> Result<Value, String> {
    if !(4..=12).contains(&t) {
        return Err("t must be between 4 and 12".into());
    }
    let sigma = Permutation::parse(perm, t).map_err(|e| e.to_string())?;
    let g = cycle_permutation_graph(&sigma).map_err(|e| e.to_string())?;
    let e2f = is_e2f(&g).map_err(|e| e.to_string())?.holds();
    let pmh = if e2f { Some(is_pmh(&g).map_err(|e| e.to_string())?.holds()) } else { None };
    Ok(json!({
        "permutation": sigma.to_string(),
        "graph6": to_graph6(&g),
        "bipartite": is_bipartite(&g),
        "girth": girth(&g),
        "e2f": e2f,
        "pmh": pmh,
        "class_one": is_class_one(&g),
    }))
}

fn to_js(v: Result<Value, String>) -> Result<String, JsValue> {
    v.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn papillon_layout(r: usize, l: usize) -> Result<String, JsValue> {
    to_js(layout_value(r, l))
}

#[wasm_bindgen]
pub fn extend_matching(r: usize, l: usize, index: usize) -> Result<String, JsValue> {
    to_js(extension_value(r, l, index))
}

#[wasm_bindgen]
pub fn classify_permutation(perm: &str, t: usize) -> Result<String, JsValue> {
    to_js(permutation_value(perm, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_of_smallest_papillon() {
        let v = layout_value(1, 1).unwrap();
        assert_eq!(v["edges"].as_array().unwrap().len(), 12);
        assert_eq!(v["labels"][4], "v1");
        assert_eq!(v["odd_girth"], 5);
        assert!(layout_value(0, 2).is_err());
        assert!(layout_value(5, 5).is_err());
    }

    #[test]
    fn extension_on_balanced_even() {
        let v = extension_value(2, 2, 0).unwrap();
        assert_eq!(v["search"].as_array().unwrap().len(), 16);
        assert_eq!(v["constructive"]["cycle"].as_array().unwrap().len(), 16);
        assert!(extension_value(2, 2, 10_000).is_err());
    }

    #[test]
    fn extension_may_fail_on_odd() {
        let total = layout_value(1, 1).unwrap()["matchings"].as_u64().unwrap() as usize;
        let failures = (0..total).filter(|&i| extension_value(1, 1, i).unwrap()["search"].is_null()).count();
        assert!(failures > 0);
    }

    #[test]
    fn classifies_permutations() {
        let v = permutation_value("(1 2)", 4).unwrap();
        assert_eq!((v["e2f"].as_bool(), v["pmh"].as_bool()), (Some(true), Some(false)));
        assert!(permutation_value("(1 9)", 4).is_err());
    }
}
