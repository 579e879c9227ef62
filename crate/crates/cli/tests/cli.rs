use std::path::PathBuf;
use std::process::{Command, Output};

use modan_core::derivation::module_derivations;
use modan_core::fixtures;
use modan_core::io::subspace_from_json;
use modan_core::multiplier::{module_multipliers, multiplier_algebra};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", &format!("{name}.json")].iter().collect()
}

fn modan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modan")).args(args).output().expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String) {
    let out = modan(args);
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, text) = run(&all);
    (code, serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")))
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn validate_exit_codes() {
    assert_eq!(run(&["validate", &path("A2")]).0, 0);
    let (code, v) = json(&["validate", &path("broken_associativity")]);
    assert_eq!(code, 1);
    assert_eq!(v["witness"].as_array().unwrap().len(), 3);
    let (code, v) = json(&["validate", &path("empty")]);
    assert_eq!(code, 0);
    assert_eq!(v["algebra"]["dim"], 0);
}

#[test]
fn usage_and_read_errors_exit_two() {
    assert_eq!(run(&["validate", "/nonexistent/file.json"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["check", &path("A2"), "--qmax", "minus"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"algebra\": ").unwrap();
    assert_eq!(run(&["validate", bad.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["module-multipliers", &path("A2")]).0, 2);
}

#[test]
fn emitted_bases_round_trip() {
    let (code, v) = json(&["multipliers", &path("A3")]);
    assert_eq!(code, 0);
    assert_eq!(subspace_from_json(&v["multipliers"]).unwrap(), multiplier_algebra(&fixtures::a3()));
    let (_, v) = json(&["module-multipliers", &path("AD3")]);
    assert_eq!(subspace_from_json(&v["module_multipliers"]).unwrap(), module_multipliers(&fixtures::ad3()));
    assert_eq!(subspace_from_json(&v["hom_into_annihilator"]).unwrap().dim(), 1);
    let (_, v) = json(&["module-derivations", &path("M2")]);
    assert_eq!(subspace_from_json(&v["module_derivations"]).unwrap(), module_derivations(&fixtures::m2()));
    assert_eq!(subspace_from_json(&v["endomorphisms"]).unwrap().dim(), 2);
}

#[test]
fn check_passes_on_fixtures() {
    for name in ["M2", "AD3"] {
        let (code, v) = json(&["check", &path(name), "--qmax", "2"]);
        assert_eq!(code, 0, "{v}");
        let entries = v["entries"].as_array().unwrap();
        assert!(entries.iter().all(|e| e["status"] != "fail"));
        let tags: Vec<&str> = entries.iter().map(|e| e["tag"].as_str().unwrap()).collect();
        let mut sorted = tags.clone();
        sorted.sort();
        assert_eq!(tags, sorted);
    }
    let (_, v) = json(&["check", &path("AD3"), "--qmax", "1"]);
    let status = |tag: &str| v["entries"].as_array().unwrap().iter().find(|e| e["tag"] == tag).unwrap()["status"].clone();
    assert_eq!(status("multiplier.commutator_range"), "pass");
    assert_eq!(status("module_multiplier.adjoint_split"), "pass");
}

#[test]
fn qmax_zero_skips() {
    let (code, v) = json(&["check", &path("M2"), "--qmax", "0"]);
    assert_eq!(code, 0);
    let skipped: Vec<&str> = v["entries"].as_array().unwrap().iter().filter(|e| e["status"] == "skipped").map(|e| e["tag"].as_str().unwrap()).collect();
    assert!(skipped.contains(&"hochschild.delta_squared"));
    assert!(skipped.contains(&"derham.cartan_magic"));
}

#[test]
fn same_seed_same_bytes() {
    let a = modan(&["check", &path("AD3"), "--qmax", "2", "--seed", "17", "--json"]);
    let b = modan(&["check", &path("AD3"), "--qmax", "2", "--seed", "17", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let t1 = modan(&["check", &path("M2"), "--qmax", "1", "--seed", "3"]);
    let t2 = modan(&["check", &path("M2"), "--qmax", "1", "--seed", "3"]);
    assert_eq!(t1.stdout, t2.stdout);
}

#[test]
fn oracle_agrees_and_respects_cap() {
    let (code, v) = json(&["oracle", &path("AD3"), "--qmax", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["agree"], true);
    let (code, v) = json(&["oracle", &path("AD3"), "--cap", "4"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("cap"));
}

#[test]
fn complexes() {
    let (code, v) = json(&["cohomology", "hochschild", &path("A2")]);
    assert_eq!(code, 0);
    assert_eq!(v["h"], serde_json::json!([2, 0, 0, 0]));
    let (code, v) = json(&["cohomology", "derham", &path("A2")]);
    assert_eq!(code, 0);
    assert_eq!(v["h"][0], 1);
    let (code, v) = json(&["cohomology", "derham", &path("AD3")]);
    assert_eq!(code, 0);
    assert_eq!(v["h"], serde_json::json!([0, 0, 0, 0]));
    assert_eq!(json(&["cohomology", "derham", &path("M2r2"), "--kappa", "lift", "--qmax", "1"]).0, 0);
    assert_eq!(run(&["check-magic", &path("M2")]).0, 0);
    assert_eq!(run(&["homotopy", &path("AD3")]).0, 0);
}

#[test]
fn curved_potential_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let pot = dir.path().join("pot.json");
    // The potential X0 -> mult by x has F(X0, X2) = -mult by y.
    let ws = dir.path().join("ws.json");
    let b3 = std::fs::read_to_string(fixture("B3")).unwrap();
    let mut v: Value = serde_json::from_str(&b3).unwrap();
    v["module"] = serde_json::json!({
        "name": "F",
        "basis": ["e", "x", "y"],
        "action": v["algebra"]["products"].clone(),
    });
    std::fs::write(&ws, v.to_string()).unwrap();
    let (code, c) = json(&["connection", ws.to_str().unwrap()]);
    assert_eq!(code, 0, "{c}");
    assert_eq!(c["flags"]["flat"], true);
    let count = c["values"].as_array().unwrap().len();
    let mut potential = vec![serde_json::json!([["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]); count];
    potential[0] = serde_json::json!([["0", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]]);
    std::fs::write(&pot, Value::Array(potential).to_string()).unwrap();
    let (_, c) = json(&["connection", ws.to_str().unwrap(), "--potential", pot.to_str().unwrap()]);
    assert_eq!(c["flags"]["flat"], false);
    assert_eq!(c["flags"]["a_linear"], true);
    let f02 = c["curvature"].as_array().unwrap().iter().find(|f| f["i"] == 0 && f["j"] == 2).unwrap();
    assert_eq!(f02["matrix"], serde_json::json!([["0", "0", "0"], ["0", "0", "0"], ["-1", "0", "0"]]));
    let kappa = format!("potential:{}", pot.display());
    let (code, v) = json(&["cohomology", "derham", ws.to_str().unwrap(), "--kappa", &kappa, "--qmax", "1"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("curvature"));
}

#[test]
fn gauge_by_an_element() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    std::fs::write(&g, r#"{"element": ["1", "1"]}"#).unwrap();
    let input = dir.path().join("pair.json");
    std::fs::write(&input, r#"{"module_op": [["0", "0"], ["0", "1"]], "algebra_op": [["0", "0"], ["0", "1"]]}"#).unwrap();
    let (code, v) = json(&["gauge", &path("M2"), "--g", g.to_str().unwrap(), "--input", input.to_str().unwrap()]);
    assert_eq!(code, 0, "{v}");
    let r = &v["results"][0];
    assert_eq!(r["difference"], serde_json::json!([["0", "0"], ["-1", "0"]]));
    assert_eq!(r["base_preserved"], true);
}
