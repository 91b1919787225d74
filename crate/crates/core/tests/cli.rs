//! End-to-end runs of the `hopfext` binary: exit codes, report content, determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfext"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&o.stdout)))
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// `build-example …` written to a scratch file.
fn build(name: &str, args: &[&str]) -> PathBuf {
    let path = scratch(name);
    let mut full = vec!["build-example"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = run(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn sweedler_monoidal_passes_and_braiding_is_obstructed() {
    let spec = build("sweedler.json", &["sweedler"]);
    let o = run(&["verify-hopf", p(&spec)]);
    assert_eq!(code(&o), 0);
    let o = run(&["check-monoidal", p(&spec)]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["summary"]["status"], "pass");
    assert_eq!(v["schema"], "hopfext/1");
    assert_eq!(v["input_sha256"].as_str().map(str::len), Some(64));

    let o = run(&["check-braided", p(&spec), "--search-sigma"]);
    assert_eq!(code(&o), 2);
    let v = json(&o);
    let cands: Vec<&Value> = v["sections"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["title"].as_str().unwrap().starts_with("sigma_candidate_"))
        .collect();
    assert_eq!(cands.len(), 4);
    for c in cands {
        let items = c["items"].as_array().unwrap();
        let get = |id: &str| items.iter().find(|i| i["id"] == id).unwrap();
        assert_eq!(get("a'")["pass"], true);
        assert_eq!(get("Ad_sigma_squared_id")["pass"], false);
        assert!(get("Ad_sigma_squared_id")["witness"].as_str().unwrap().contains("Ad_σ²(x) = (-1)·x"));
    }
}

#[test]
fn sweedler_with_other_t() {
    let spec = build("sweedler_t.json", &["sweedler", "--t", "-3/2"]);
    assert_eq!(code(&run(&["check-monoidal", p(&spec)])), 0);
    assert_eq!(code(&run(&["check-braided", p(&spec), "--search-sigma"])), 2);
}

#[test]
fn ty_braided_roundtrip_and_sigma_file() {
    let spec = build("ty.json", &["ty", "--braiding", "2"]);
    let o = run(&["check-braided", p(&spec)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&spec).unwrap()).unwrap();

    // the same σ and β from a separate file
    let sig = scratch("ty_sigma.json");
    std::fs::write(&sig, serde_json::json!({ "sigma": v["sigma"], "beta": v["beta"] }).to_string()).unwrap();
    assert_eq!(code(&run(&["check-braided", p(&spec), "--sigma-file", p(&sig)])), 0);

    // σ = 1 violates a′
    let bad = scratch("ty_sigma_bad.json");
    std::fs::write(&bad, "[1, 1]").unwrap();
    let o = run(&["check-braided", p(&spec), "--sigma-file", p(&bad), "--beta", "1"]);
    assert_eq!(code(&o), 2);

    // index past the four braidings
    let o = run(&["build-example", "ty", "--braiding", "4"]);
    assert_eq!(code(&o), 3);
    let o = run(&["build-example", "ty", "--orders", "4", "--braiding", "0"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("braiding impossible"));
}

#[test]
fn schema_errors_exit_3_with_pointer() {
    let spec = build("schema_base.json", &["sweedler"]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&spec).unwrap()).unwrap();
    v["hopf"]["delta"][5] = Value::String("not a number".into());
    let bad = scratch("schema_bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let o = run(&["check-monoidal", p(&bad)]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["pointer"], "/hopf/delta/5");

    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&run(&["verify-hopf", p(&bad)])), 3);
    assert_eq!(code(&run(&["verify-hopf", p(&scratch("missing.json"))])), 3);
}

#[test]
fn field_and_mode_restrictions() {
    let o = run(&["--field-conductor", "4", "build-example", "sf", "--zeta", "-1"]);
    assert_eq!(code(&o), 3);
    let spec = build("sf.json", &["sf", "--zeta", "-1"]);
    assert_eq!(code(&run(&["--field-conductor", "4", "check-monoidal", p(&spec)])), 3);
    assert_eq!(code(&run(&["--field-conductor", "8", "check-monoidal", p(&spec)])), 0);
    let o = run(&["--mode", "vect", "check-monoidal", p(&spec)]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["pointer"], "/hopf/parity/1");
}

#[test]
fn sf_braided_report_is_deterministic() {
    let spec = build("sf_det.json", &["sf"]);
    let a = run(&["check-braided", p(&spec)]);
    let b = run(&["check-braided", p(&spec)]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let notes: Vec<&str> = v["notes"].as_array().unwrap().iter().map(|n| n.as_str().unwrap()).collect();
    assert!(notes.iter().any(|n| n.contains("transparent generators: [k]")), "{notes:?}");
}

#[test]
fn full_suite_passes() {
    let out = scratch("full_suite.json");
    let o = run(&["full-suite", "--out", p(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    let titles: Vec<&str> = v["sections"].as_array().unwrap().iter().map(|s| s["title"].as_str().unwrap()).collect();
    for prefix in ["sweedler/", "ty[2]/", "ty[4]/", "sf2/", "sf4/", "h16/"] {
        assert!(titles.iter().any(|t| t.starts_with(prefix)), "no section for {prefix}");
    }
    assert!(titles.contains(&"sweedler/braiding_obstruction"));
}
