use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cliffk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = cliffk(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn schema_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../schemas"))
}

/// Schema with its relative `$id` rebased so cross-file `$ref`s resolve.
fn load_schema(name: &str) -> Value {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(schema_dir().join(name)).unwrap()).unwrap();
    v["$id"] = Value::String(format!("json-schema:///{name}"));
    v
}

fn schema_errors(schema_name: &str, instance: &Value) -> Vec<String> {
    let mut opts = jsonschema::JSONSchema::options();
    opts.with_draft(jsonschema::Draft::Draft202012);
    for f in std::fs::read_dir(schema_dir()).unwrap() {
        let name = f.unwrap().file_name().into_string().unwrap();
        opts.with_document(format!("json-schema:///{name}"), load_schema(&name));
    }
    let schema = load_schema(schema_name);
    let compiled = opts.compile(&schema).expect("schema compiles");
    let msgs = match compiled.validate(instance) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    msgs
}

fn validate(schema_name: &str, instance: &Value) {
    let msgs = schema_errors(schema_name, instance);
    assert!(msgs.is_empty(), "{schema_name}: {msgs:?}");
}

#[test]
fn schemas_reject_malformed_output() {
    let mut v = json(&["classify", "0", "2"]);
    v["ring"] = Value::String("O".into());
    assert!(!schema_errors("classify.schema.json", &v).is_empty());
    let mut v = json(&["fuse", "nu", "nubar"]);
    v["terms"][0]["spin"] = Value::String("one".into());
    assert!(!schema_errors("state-op.schema.json", &v).is_empty());
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "0", "2"]);
    assert_eq!(v["ring"], "H");
    let v = json(&["classify", "1", "1", "--oracle"]);
    assert_eq!(v["matrix_form"], "R(2)");
    assert_eq!(v["oracle"]["agrees"], true);
    validate("classify.schema.json", &v);
}

#[test]
fn classify_rejects_oversized_signature() {
    let o = cliffk(&["classify", "13", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn malformed_arguments_exit_2() {
    assert_eq!(cliffk(&["classify", "x", "0"]).status.code(), Some(2));
    assert_eq!(cliffk(&["fuse", "|Q,0,0,1⟩", "nu"]).status.code(), Some(2));
    assert_eq!(cliffk(&["double", "e-", "+"]).status.code(), Some(2));
    assert_eq!(cliffk(&["iso-check", "1;3", "1,1"]).status.code(), Some(2));
}

#[test]
fn factorize_example() {
    let v = json(&["factorize", "1", "3"]);
    assert_eq!(v["chains"][0]["factors"], serde_json::json!([[1, 1], [0, 2]]));
    assert_eq!(v["chains"][0]["verified"], true);
    validate("factorize.schema.json", &v);
    let v = json(&["factorize", "3", "0"]);
    assert_eq!(v["odd"]["kind"], "complex");
    validate("factorize.schema.json", &v);
}

#[test]
fn idempotent_example() {
    let v = json(&["idempotent", "2", "4"]);
    assert_eq!(v["idempotent"]["factored"], "½(1+e15)½(1+e26)");
    assert_eq!(v["idempotent"]["primitive"], true);
    validate("idempotent.schema.json", &v);
}

#[test]
fn iso_check_prints_witness_or_failure() {
    let v = json(&["iso-check", "1,3", "1,1", "0,2"]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    validate("iso-check.schema.json", &v);
    let o = cliffk(&["--format", "json", "iso-check", "2,0", "0,2"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verified"], false);
    validate("iso-check.schema.json", &v);
}

#[test]
fn cpt_table() {
    let v = json(&["cpt", "0", "2"]);
    assert_eq!(v["order"], 8);
    assert_eq!(v["table"].as_array().unwrap().len(), 8);
    validate("cpt.schema.json", &v);
}

#[test]
fn state_commands() {
    let o = cliffk(&["fuse", "|H,0,1,1/2⟩", "|H~,0,-1,1/2⟩"]);
    assert!(stdout(&o).starts_with("fuse |H,0,1,1/2⟩ |H~,0,-1,1/2⟩ = |R,0,0,1⟩"));
    let v = json(&["annihilate", "e-", "e+"]);
    assert_eq!(v["result"], "2|R,0,0,1⟩");
    validate("state-op.schema.json", &v);
    let v = json(&["fuse", r#"{"ring":"H","conjugated":false,"b":0,"lepton":1,"k":1,"r":0}"#, "nubar"]);
    assert_eq!(v["result"], "|R,0,0,1⟩");
    assert!(v["note"].is_string());
    validate("state-op.schema.json", &json(&["double", "nu", "⊖"]));
}

#[test]
fn spectrum_table() {
    let o = cliffk(&["spectrum", "--max-m", "2"]);
    assert_eq!(stdout(&o).lines().count(), 7);
    let v = json(&["spectrum", "--max-m", "2"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
    validate("spectrum.schema.json", &v);
}

#[test]
fn atlas_file() {
    let dir = std::env::temp_dir().join(format!("cliffk-atlas-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("atlas.json");
    let o = cliffk(&["atlas", "--max-n", "8", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    validate("atlas.schema.json", &v);
    let entries = v["entries"].as_array().unwrap();
    let find = |p: u64, q: u64| entries.iter().find(|e| e["signature"] == serde_json::json!([p, q])).unwrap();
    let e42 = find(4, 2);
    assert_eq!(e42["chains"].as_array().unwrap().len(), 3);
    assert!(e42["chains"].as_array().unwrap().iter().all(|c| c["verified"] == true));
    assert_eq!(find(0, 8)["chains"][0]["transition"], "H⊗R⊗H⊗R → R");
    let order: Vec<(u64, u64)> = entries
        .iter()
        .map(|e| {
            let s = e["signature"].as_array().unwrap();
            let (p, q) = (s[0].as_u64().unwrap(), s[1].as_u64().unwrap());
            (p + q, p)
        })
        .collect();
    let mut sorted = order.clone();
    sorted.sort();
    assert_eq!(order, sorted);

    let small = dir.join("small.json");
    cliffk(&["atlas", "--max-n", "4", "--out", small.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&small).unwrap()).unwrap();
    assert_eq!(v["count"], 15);
    assert_eq!(v["all_verified"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn atlas_io_failure_exits_4() {
    let o = cliffk(&["atlas", "--max-n", "2", "--out", "/nonexistent-dir/atlas.json"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(cliffk(&["atlas", "--max-n", "11", "--out", "/tmp/x.json"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--format", "json", "factorize", "4", "2"],
        vec!["--format", "json", "idempotent", "3", "1"],
        vec!["--format", "json", "cpt", "2", "0"],
        vec!["--format", "json", "spectrum", "--max-m", "4"],
    ] {
        assert_eq!(cliffk(&args).stdout, cliffk(&args).stdout);
    }
}
