use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_wreathforge"));
    c.env_remove("WREATHFORGE_DIM_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn emit(dir: &TempDir, name: &str, field: &str) -> PathBuf {
    let path = dir.path().join(format!("{name}.json"));
    let o = run(&[
        "examples",
        "emit",
        name,
        "--field",
        field,
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_library_model_passes() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "radford_h4", "q");
    let o = run(&["check", s(&path), "--suite", "all"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("overall  PASS"));
}

#[test]
fn check_perturbed_model_fails_with_counterexample() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "twisted_v4", "q");
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc["generators"]["sigma"]["matrix"][0][3] = Value::String("2".into());
    let bent = dir.path().join("perturbed.json");
    std::fs::write(&bent, doc.to_string()).unwrap();

    let o = run(&["check", s(&bent), "--suite", "hopf-datum", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let rep: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let axioms = rep["suites"][0]["axioms"].as_array().unwrap();
    let cocycle = axioms.iter().find(|a| a["id"] == "hopf.2-cocycle").unwrap();
    assert_eq!(cocycle["verdict"], "fail");
    assert!(cocycle["counterexample"]["column"].is_u64());
    assert_eq!(rep["catalog_version"], 1);
}

#[test]
fn malformed_files_exit_2() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("malformed.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(code(&run(&["check", s(&path)])), 2);

    let path = emit(&dir, "trivial", "q");
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc["generators"]["mul_F"]["matrix"][1] = Value::Array(vec![]);
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = run(&["check", s(&path)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("/generators/mul_F/matrix/1"));

    assert_eq!(code(&run(&["check", "/nonexistent/model.json"])), 2);
}

#[test]
fn unknown_suite_is_an_error() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "trivial", "q");
    assert_eq!(code(&run(&["check", s(&path), "--suite", "nope"])), 2);
}

#[test]
fn classify_reports() {
    let dir = TempDir::new().unwrap();
    let classify = |name: &str| -> Value {
        let path = emit(&dir, name, "q");
        let o = run(&["classify", s(&path)]);
        assert_eq!(code(&o), 0);
        serde_json::from_str(&stdout(&o)).unwrap()
    };
    let trivial = classify("trivial");
    assert_eq!(trivial["signature"], "((0,0),0),((0,0),0)");
    assert_eq!(trivial["trivalent"], true);
    let twisted = classify("twisted_v4");
    assert_eq!(twisted["trivalent"], false);
    assert_eq!(twisted["named_example_match"], "twisted-group-algebra");
    let radford = classify("radford_h4");
    assert_eq!(radford["theorem_applies"], true);
    assert_eq!(radford["fb_bimonad"], "pass");
    assert_eq!(radford["suites"]["ybe"], "pass");
}

#[test]
fn construct_smash_product_gives_s3() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "smash_s3", "q");
    let out = dir.path().join("product.json");
    assert_eq!(code(&run(&["construct", s(&path), "--out", s(&out)])), 0);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["objects"][1]["dim"], 6);
    // Every product of basis elements is a single basis element.
    let mul = doc["generators"]["mul_F"]["matrix"].as_array().unwrap();
    assert_eq!(mul.len(), 6);
    for c in 0..36 {
        let ones = mul.iter().filter(|row| row[c] == "1").count();
        let zeros = mul.iter().filter(|row| row[c] == "0").count();
        assert_eq!((ones, zeros), (1, 5), "column {c}");
    }
    // The constructed file is itself a checkable model.
    assert_eq!(code(&run(&["check", s(&out), "--suite", "base"])), 0);
}

#[test]
fn construct_to_unwritable_path_exits_2() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "trivial", "q");
    assert_eq!(
        code(&run(&["construct", s(&path), "--out", "/nonexistent/dir/out.json"])),
        2
    );
}

#[test]
fn axioms_commands() {
    let o = run(&["axioms", "show", "ybe.fbf"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("boundary: F B F -> F B F"));
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with("lhs: (") || l.starts_with("rhs: ("))
            .count(),
        2
    );

    let o = run(&["axioms", "list"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().count() >= 60);

    assert_eq!(code(&run(&["axioms", "show", "nonsense"])), 2);
}

#[test]
fn examples_list_and_field_override() {
    let o = run(&["examples", "list"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("radford_h4"));

    let o = run(&["examples", "emit", "smash_s3", "--field", "fp:7"]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["field"], "fp:7");
    assert_eq!(code(&run(&["examples", "emit", "smash_s3", "--field", "fp:3"])), 2);
    assert_eq!(code(&run(&["examples", "emit", "smash_s3", "--field", "fp:9"])), 2);
    assert_eq!(code(&run(&["examples", "emit", "nope"])), 2);
}

#[test]
fn dimension_cap_flag_and_env() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "smash_s3", "q");
    // Too small for the declared objects.
    assert_eq!(code(&run(&["check", s(&path), "--dimension-cap", "10"])), 2);
    let o = bin()
        .args(["check", s(&path)])
        .env("WREATHFORGE_DIM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    // Large enough for the model but not for the product identities.
    let o = run(&["check", s(&path), "--suite", "tau-bimonad-FB", "--dimension-cap", "200"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("SKIPPED"));
}

#[test]
fn reports_are_stable() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "bicrossproduct_s3", "fp:7");
    let a = stdout(&run(&["check", s(&path), "--format", "json"]));
    let b = stdout(&run(&["check", s(&path), "--format", "json"]));
    assert_eq!(a, b);
}
