use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn hcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcycle"))
        .args(args)
        .env_remove("HH_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

/// True when no JSON number in `v` is an integer.
fn no_integer_numbers(v: &Value) -> bool {
    match v {
        Value::Number(n) => !(n.is_i64() || n.is_u64()),
        Value::Array(a) => a.iter().all(no_integer_numbers),
        Value::Object(o) => o.values().all(no_integer_numbers),
        _ => true,
    }
}

#[test]
fn validate_exit_codes() {
    assert_eq!(code(&hcycle(&["validate", &fixture("triangle.json")])), 0);
    assert_eq!(code(&hcycle(&["validate", &fixture("malformed.json")])), 2);
    let o = hcycle(&["validate", &fixture("broken.json")]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("(dim 2, row 0, col 0)"), "{}", stdout(&o));
    assert_eq!(code(&hcycle(&["validate", "/nonexistent/file.json"])), 2);
}

#[test]
fn validate_json_reports_location() {
    let o = hcycle(&["validate", "--json", &fixture("broken.json")]);
    assert_eq!(code(&o), 3);
    let v = json(&o);
    assert_eq!(v["validation"]["ok"], Value::Bool(false));
    assert_eq!(v["validation"]["failure"]["dim"], "2");
    assert_eq!(v["validation"]["failure"]["row"], "0");
    assert_eq!(v["validation"]["failure"]["col"], "0");
}

#[test]
fn harmonic_triangle() {
    let o = hcycle(&["harmonic", &fixture("triangle.json"), "--dim", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("λ  = (1, 1, 1)"));
    assert!(out.contains("k_1 = 3"));
    assert!(out.contains("k^1 = 1"));
    assert!(out.contains("certificate OK"));
}

#[test]
fn harmonic_doubled_loop_json() {
    for mode in ["brute", "fast", "both"] {
        let o = hcycle(&["harmonic", &fixture("doubled_loop.json"), "--mode", mode, "--json"]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        let v = json(&o);
        let c = &v["certificate"];
        assert_eq!(c["lambda"]["coeffs"], serde_json::json!(["0", "2"]));
        assert_eq!(c["lambda_star"]["coeffs"], serde_json::json!(["0", "4"]));
        assert_eq!(c["k_i"], "1");
        assert_eq!(c["k^i"], "4");
        assert_eq!(c["h_above"], "2");
        assert_eq!(c["ok"], Value::Bool(true));
        assert!(no_integer_numbers(&v));
        for r in c["identity_residuals"].as_object().unwrap().values() {
            assert_eq!(r, "0");
        }
    }
}

#[test]
fn harmonic_disc_violates_condition() {
    let o = hcycle(&["harmonic", &fixture("disc.json"), "--dim", "1"]);
    assert_eq!(code(&o), 4);
    let err = stderr(&o);
    assert!(err.contains("rk H̃_1 = 0 ≠ 1"), "{err}");
    assert!(err.contains("rk H̃_0") && err.contains("rk H̃_2"), "{err}");
}

#[test]
fn harmonic_rejects_unknown_mode() {
    assert_eq!(
        code(&hcycle(&["harmonic", &fixture("triangle.json"), "--mode", "slow"])),
        2
    );
}

#[test]
fn harmonic_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triangle.dot");
    let o = hcycle(&["harmonic", &fixture("triangle.json"), "--dot", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"a\" -> \"b\" [label=\"1\"]"), "{dot}");
}

#[test]
fn k4_listings() {
    let o = hcycle(&["trees", &fixture("k4.txt")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("k_1 = 16\n"));
    assert_eq!(out.lines().count(), 1 + 16 + 1);
    assert!(out.contains("Σ wt² = 16 = k_1 OK"));

    let o = hcycle(&["cycletrees", &fixture("k4.txt"), "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["rows"].as_array().unwrap().len(), 15);
    assert_eq!(v["nonzero"], "15");
    assert!(no_integer_numbers(&v));

    let o = hcycle(&["cycletrees", &fixture("k4.txt"), "--all", "--json"]);
    assert_eq!(json(&o)["rows"].as_array().unwrap().len(), 15);
}

#[test]
fn cycletree_norm_identity_on_unicycle_input() {
    let o = hcycle(&["cycletrees", &fixture("doubled_loop.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("λ∘λ = 4, k_1 Σ w(C_U)² = 4 OK"), "{}", stdout(&o));
}

#[test]
fn dual_listings() {
    let o = hcycle(&["dual", &fixture("doubled_loop.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("Σ wt² = 4 = k^1 OK"));
    let o = hcycle(&["dual", &fixture("doubled_loop.json"), "--cycletrees"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("nonzero dual cycletrees: 1"));
}

#[test]
fn cap_exceeded() {
    let o = hcycle(&["cycletrees", &fixture("k9.txt"), "--cap", "1000"]);
    assert_eq!(code(&o), 5);
    let o = Command::new(env!("CARGO_BIN_EXE_hcycle"))
        .args(["trees", &fixture("k4.txt")])
        .env("HH_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 5, "{}", stderr(&o));
}

#[test]
fn winding_and_cutting() {
    let o = hcycle(&["winding", &fixture("triangle.json"), "--chain", "1,1,1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("w = 1\n"));
    assert!(stdout(&o).contains("= 1 OK"));

    let o = hcycle(&["winding", &fixture("triangle.json"), "--chain", "-1 -1 -1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("w = -1\n"));

    assert_eq!(
        code(&hcycle(&["winding", &fixture("triangle.json"), "--chain", "1,0,0"])),
        6
    );
    assert_eq!(
        code(&hcycle(&["winding", &fixture("triangle.json"), "--chain", "1,0"])),
        2
    );
    assert_eq!(
        code(&hcycle(&["winding", &fixture("triangle.json"), "--chain", "1,x,0"])),
        2
    );

    let o = hcycle(&["cutting", &fixture("doubled_loop.json"), "--chain", "0,1", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["c"], "1");
    assert_eq!(v["check"]["agrees"], Value::Bool(true));
    assert_eq!(
        code(&hcycle(&["cutting", &fixture("doubled_loop.json"), "--chain", "1,0"])),
        6
    );
}

#[test]
fn graph_reports() {
    let o = hcycle(&["kn", "4"]);
    assert_eq!(stdout(&o), "15\n");
    assert_eq!(code(&hcycle(&["kn", "2"])), 2);

    let o = hcycle(&["profile", &fixture("k4.txt")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("l3=12 l4=3; identity 48=48 OK\n"));

    let o = hcycle(&["spectrum", &fixture("c5.json"), "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let est = v["limit"]["estimate"].as_f64().unwrap();
    assert!((est - 25.0).abs() < 25.0 * 1e-6, "{est}");
    assert!(v["limit"]["imaginary_residual"].as_f64().unwrap() < 1e-9);

    assert_eq!(
        code(&hcycle(&["spectrum", &fixture("c5.json"), "--t", "0.001,0.01"])),
        2
    );
    assert_eq!(code(&hcycle(&["profile", &fixture("disc.json")])), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["harmonic", "--json"],
        vec!["harmonic"],
        vec!["cycletrees", "--json"],
        vec!["dual", "--cycletrees"],
    ] {
        let mut args: Vec<String> = args.into_iter().map(String::from).collect();
        args.insert(1, fixture("doubled_loop.json"));
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(hcycle(&args).stdout, hcycle(&args).stdout, "{args:?}");
    }
}

#[test]
fn torsion_only_homology_is_a_condition_violation() {
    let o = hcycle(&["harmonic", &fixture("rp2.txt"), "--dim", "1"]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("rk H̃_1 = 0 ≠ 1"), "{}", stderr(&o));
}
