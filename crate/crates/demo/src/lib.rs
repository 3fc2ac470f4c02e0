//! WebAssembly bindings behind `www/index.html`. Every entry point takes a
//! space document (`{"points":N,"opens":[[...],...]}`, `kind` optional) and
//! returns a JSON string, or an error message.

use mtkit_core::family::{family, FamilyKind};
use mtkit_core::functors::omega;
use mtkit_core::separation::{classify, mt_axiom, urysohn_family, Axiom};
use mtkit_core::{frame_axiom, ElementSet, FinSpace, FrameAxiom};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn points(a: ElementSet) -> Value {
    json!(a.points().collect::<Vec<_>>())
}

fn parse_space(doc: &str) -> Result<FinSpace, String> {
    let v: Value = serde_json::from_str(doc).map_err(|e| format!("invalid JSON: {e}"))?;
    let n = v["points"].as_u64().ok_or("points: expected a non-negative integer")? as usize;
    let opens = v["opens"].as_array().ok_or("opens: expected an array")?;
    let mut sets = Vec::with_capacity(opens.len());
    for (i, open) in opens.iter().enumerate() {
        let open = open.as_array().ok_or(format!("opens[{i}]: expected an array"))?;
        let mut s = ElementSet::EMPTY;
        for (j, x) in open.iter().enumerate() {
            match x.as_u64() {
                Some(x) if x < 32 => s = s.with(x as usize),
                _ => return Err(format!("opens[{i}][{j}]: expected a point index")),
            }
        }
        sets.push(s);
    }
    FinSpace::new(n, sets).map_err(|e| e.to_string())
}

fn parse_mask(m: &FinSpace, text: &str) -> Result<ElementSet, String> {
    let text = text.trim();
    let bits = match text.strip_prefix("0x") {
        Some(hex) => u32::from_str_radix(hex, 16),
        None => text.parse(),
    }
    .map_err(|e| format!("bad mask {text:?}: {e}"))?;
    let a = ElementSet::from_bits(bits);
    if !a.is_subset(m.full()) {
        return Err(format!("{a} is not a subset of the {}-point space", m.n()));
    }
    Ok(a)
}

/// Separation profile with witnesses, plus the frame axioms of `O(M)`.
#[wasm_bindgen]
pub fn classify_space(doc: &str) -> Result<String, String> {
    let m = parse_space(doc)?;
    let p = classify(&m);
    let axioms: Vec<Value> = Axiom::ALL
        .into_iter()
        .map(|a| {
            let v = mt_axiom(&m, a);
            json!({"axiom": a.name(), "holds": v.holds, "witness": v.witness.map(|w| w.to_string())})
        })
        .collect();
    debug_assert!(Axiom::ALL.into_iter().all(|a| p.get(a) == mt_axiom(&m, a).holds));
    let o = omega(&m);
    let frame: Vec<Value> = FrameAxiom::ALL
        .into_iter()
        .map(|a| json!({"axiom": a.name(), "holds": frame_axiom(&o, a)}))
        .collect();
    Ok(json!({"axioms": axioms, "frame": frame, "opens": m.opens().len()}).to_string())
}

/// `□a`, `◇a` and the families `a` belongs to.
#[wasm_bindgen]
pub fn explore(doc: &str, mask: &str) -> Result<String, String> {
    let m = parse_space(doc)?;
    let a = parse_mask(&m, mask)?;
    let kinds: Vec<&str> = FamilyKind::ALL
        .into_iter()
        .filter(|&k| family(&m, k).contains(a))
        .map(|k| k.name())
        .collect();
    Ok(json!({
        "element": points(a),
        "interior": points(m.interior(a)),
        "closure": points(m.closure(a)),
        "families": kinds,
    })
    .to_string())
}

/// The dyadic family `u_p` between closed `c` and open `a`.
#[wasm_bindgen]
pub fn urysohn(doc: &str, closed: &str, open: &str, depth: u32) -> Result<String, String> {
    let m = parse_space(doc)?;
    let (c, a) = (parse_mask(&m, closed)?, parse_mask(&m, open)?);
    let f = urysohn_family(&m, c, a, depth).map_err(|e| e.to_string())?;
    let d = 1usize << depth;
    let members: Vec<Value> = (0..=d).map(|k| json!({"p": format!("{k}/{d}"), "u": points(f.at(k))})).collect();
    Ok(json!({"family": members}).to_string())
}
