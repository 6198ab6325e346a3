use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gm_deform::hodge::TripleFiltered;
use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gmdeform"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let out: Output = bin().args(args).args(["--format", "json", "--deterministic"]).output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v, String::from_utf8_lossy(&out.stderr).into_owned())
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn free_group_cohomology() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "f2.json", &json!({
        "presentation": {"generators": 2},
        "representation": {"images": [[["1/3+0/1*i"]], [["1"]]]}
    }));
    let (code, v, _) = run(&["cohomology", "--input", s(&p)]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dims"], json!([1, 2, 0]));
    assert_eq!(v["passed"], json!(true));
}

#[test]
fn failing_relation_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "bad.json", &json!({
        "presentation": {"generators": 2, "relations": [[1, 2, -1, -2]]},
        "representation": {"images": [[["1", "1"], ["0", "1"]], [["1", "0"], ["1", "1"]]]}
    }));
    let (code, v, err) = run(&["cohomology", "--input", s(&p)]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["pointer"], json!("/presentation/relations/0"));
    assert_eq!(v["error"]["kind"], json!("hypothesis"));
    assert!(v["error"]["witness"]["value"].is_array());
    assert!(err.contains("relation 0"));
}

#[test]
fn parse_errors_carry_pointers() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "typo.json", &json!({
        "presentation": {"generators": 1},
        "representation": {"images": [[["1/0"]]]}
    }));
    let (code, v, _) = run(&["cohomology", "--input", s(&p)]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], json!("parse"));
    assert_eq!(v["error"]["pointer"], json!("/representation/images/0/0/0"));
    let p = write(dir.path(), "extra.json", &json!({
        "presentation": {"generators": 1, "rels": []},
        "representation": {"images": [[["1"]]]}
    }));
    let (code, v, _) = run(&["cohomology", "--input", s(&p)]);
    assert_eq!(code, 1);
    assert!(v["error"]["message"].as_str().unwrap().contains("rels"));
    let (code, v, _) = run(&["cohomology", "--input", s(&dir.path().join("missing.json"))]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], json!("io"));
}

#[test]
fn unreduced_relation_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "unreduced.json", &json!({
        "presentation": {"generators": 1, "relations": [[1, -1, 1]]},
        "representation": {"images": [[["1"]]]}
    }));
    let (code, v, _) = run(&["cohomology", "--input", s(&p)]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["pointer"], json!("/presentation/relations/0"));
}

#[test]
fn genus_two_cone_is_free() {
    let dir = tempfile::tempdir().unwrap();
    let g: Value = serde_json::from_str(&std::fs::read_to_string(data("genus2_gl1.json")).unwrap()).unwrap();
    let p = write(dir.path(), "cone.json", &json!({ "group": g }));
    let (code, v, _) = run(&["cone", "--input", s(&p), "--order", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["ring_dims"], json!([1, 4, 10, 20]));
}

#[test]
fn torus_cone_has_quadrics() {
    let (code, v, _) = run(&["cone", "--input", s(&data("torus_gl2.json")), "--order", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["formal"]["generated_in_degree_two"], json!(true));
    assert_eq!(v["result"]["formal"]["degree_two_equals_obstruction_image"], json!(true));
    assert!(v["result"]["ideal"]["generators_by_degree"]["2"].is_object());
}

#[test]
fn artin_powers() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "a.json", &json!({ "nvars": 2, "relations": {"2": [["0", "1", "0"]]} }));
    let (code, v, _) = run(&["artin", "--input", s(&p), "--order", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dims"], json!([1, 2, 2, 2]));
    assert!(v["result"]["powers_equal_weight_filtration"].as_array().unwrap().iter().all(|b| b == &json!(true)));
}

#[test]
fn split_cone_mhs_passes() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "c.json", &json!({ "cone": {
        "h1_types": [[1, 0], [0, 1]], "h2_types": [[1, 1]], "obs": [[["0"], ["1"]], [["1"], ["0"]]]
    }}));
    let (code, v, _) = run(&["mhs-check", "--input", s(&p), "--order", "3"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["ring_dims"], json!([1, 2, 2, 2]));
}

#[test]
fn mhs_and_mhalg_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let t = TripleFiltered::split_on_basis(&[(-1, 0), (0, -1)]);
    let p = write(dir.path(), "m.json", &json!({ "mhs": t }));
    let (code, v, _) = run(&["mhs-check", "--input", s(&p)]);
    assert_eq!(code, 0, "{v}");
    let free = json!({ "artin": {"nvars": 2, "types": [[-1, 0], [0, -1]]}, "tangent": t });
    let p = write(dir.path(), "free.json", &json!({ "mhalg": free }));
    let (code, v, _) = run(&["mhs-check", "--input", s(&p), "--order", "3"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["conditions"], json!([true, true, true, true]));
    // t₀² + t₁² mixes types (−2, 0) and (0, −2)
    let bad = json!({ "artin": {"nvars": 2, "relations": {"2": [["1", "0", "1"]]}, "types": [[-1, 0], [0, -1]]}, "tangent": t });
    let p = write(dir.path(), "bad.json", &json!({ "mhalg": bad }));
    let (code, v, _) = run(&["mhs-check", "--input", s(&p), "--order", "2"]);
    assert_eq!(code, 2);
    assert_eq!(v["result"]["conditions"], json!([true, true, false, true]));
}

#[test]
fn formal_model_series_vanish() {
    let (code, v, _) = run(&["mc", "--input", s(&data("formal_model.json")), "--order", "4"]);
    assert_eq!(code, 0);
    let alphas = v["result"]["series"]["primed"]["alphas"].as_array().unwrap();
    assert_eq!(alphas.len(), 4);
    assert_eq!(v["result"]["series"]["primed"]["flatness"]["flat"], json!(true));
}

#[test]
fn ddbar_model_pipeline() {
    let m = data("ddbar_model.json");
    let (code, v, _) = run(&["mc", "--input", s(&m), "--order", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["series"]["v"]["types"]["pure"], json!([true, true, true]));
    let (code, v, _) = run(&["compare-gauge", "--input", s(&m), "--order", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["sign"], json!(-1));
    assert_eq!(v["result"]["verified"], json!(true));
    let (code, v, _) = run(&["vmhs", "--input", s(&m), "--order", "2"]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn failed_ddbar_exits_two_with_witness() {
    let (code, v, _) = run(&["mc", "--input", s(&data("not_ddbar.json"))]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["witness"]["degree"], json!(1));
}

#[test]
fn outputs_are_deterministic_and_atomic() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let input = data("torus_gl2.json");
    let args = ["cone", "--input", s(&input), "--out", s(&out), "--deterministic"];
    assert!(bin().args(args).output().unwrap().status.success());
    let first = std::fs::read(out.join("report.json")).unwrap();
    assert!(bin().args(args).output().unwrap().status.success());
    assert_eq!(first, std::fs::read(out.join("report.json")).unwrap());
    assert!(std::fs::read_to_string(out.join("summary.txt")).unwrap().ends_with("PASS\n"));
    let leftovers: Vec<_> = std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(leftovers.len(), 2);
    let stamped = bin().args(&args[..5]).args(["--format", "json"]).output().unwrap();
    let v: Value = serde_json::from_slice(&stamped.stdout).unwrap();
    assert!(v["generated_at"].is_u64());
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert!(v.get("generated_at").is_none());
}

#[test]
fn transversal_flag() {
    let (code, _, err) = run(&["cone", "--input", s(&data("torus_gl2.json")), "--transversal", "nonsense"]);
    assert_eq!(code, 1);
    assert!(err.contains("transversal"));
}
