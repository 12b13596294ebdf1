//! Browser bindings. Every function returns the same JSON the `cliffk`
//! command prints with `--format json`, or throws a string.

use wasm_bindgen::prelude::*;

use clifford_kernel::report;
use clifford_kernel::states::{fuse, StateVector};
use clifford_kernel::Signature;

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn signature(p: usize, q: usize) -> Result<Signature, String> {
    Signature::new(p, q).map_err(|e| e.to_string())
}

/// Classification of `Cl(p,q)` together with the idempotent oracle.
pub fn classify_json(p: usize, q: usize) -> Result<String, String> {
    let r = report::classify_report(signature(p, q)?, true).map_err(|e| e.to_string())?;
    Ok(to_json(&r))
}

/// Factor chains (even `p+q`) or the odd decomposition, each with its check.
pub fn factorize_json(p: usize, q: usize) -> Result<String, String> {
    Ok(to_json(&report::factorize_report(signature(p, q)?)))
}

pub fn fuse_json(a: &str, b: &str) -> Result<String, String> {
    let a = StateVector::parse_any(a).map_err(|e| e.to_string())?;
    let b = StateVector::parse_any(b).map_err(|e| e.to_string())?;
    Ok(to_json(&report::single_report("fuse", &[&a, &b], &fuse(&a, &b))))
}

#[wasm_bindgen]
pub fn classify(p: usize, q: usize) -> Result<String, JsValue> {
    classify_json(p, q).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn factorize(p: usize, q: usize) -> Result<String, JsValue> {
    factorize_json(p, q).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = fuseStates)]
pub fn fuse_states(a: &str, b: &str) -> Result<String, JsValue> {
    fuse_json(a, b).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bindings_produce_json() {
        let v: serde_json::Value = serde_json::from_str(&classify_json(1, 3).unwrap()).unwrap();
        assert_eq!(v["ring"], "H");
        assert_eq!(v["oracle"]["agrees"], true);
        let v: serde_json::Value = serde_json::from_str(&factorize_json(2, 2).unwrap()).unwrap();
        assert_eq!(v["verified"], true);
        let v: serde_json::Value = serde_json::from_str(&fuse_json("nu", "nubar").unwrap()).unwrap();
        assert_eq!(v["result"], "|R,0,0,1⟩");
        assert!(classify_json(7, 6).is_err());
        assert!(fuse_json("|X,0,0,0⟩", "nu").is_err());
    }
}
