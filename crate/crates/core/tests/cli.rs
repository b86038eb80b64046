use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bitrade(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bitrade")).args(args).env_remove("BITRADE_MAX_ELEMENTS").output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn construct_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_str().unwrap().to_string();
    let mut all = vec!["construct"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", &path]);
    let out = bitrade(&all);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn construct_reports_shape() {
    let out = bitrade(&["construct", "--family", "p3:p=3", "--format", "text"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("size=27 k=3 rows=9 cols=9 syms=9"));
    assert!(stdout(&out).starts_with("∘"));
}

#[test]
fn construct_is_deterministic() {
    let args = ["construct", "--group", "alt:4", "--a", "(1,2,3)", "--b", "(2,1,4)", "--c", "(2,4,3)"];
    let (x, y) = (bitrade(&args), bitrade(&args));
    assert_eq!(code(&x), 0);
    assert_eq!(x.stdout, y.stdout);
}

#[test]
fn verify_passes_on_a_thin_family() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_to(dir.path(), "a4.json", &["--family", "alt:m=1"]);
    let out = bitrade(&["verify", &path]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for p in ["bitrade", "separated", "primary", "thin", "orthogonal", "homogeneous_k", "minimal"] {
        assert_eq!(rep[p]["value"], "yes", "{p}");
    }
    assert_eq!(rep["homogeneous_k"]["k"], 3);
    assert!(rep["thin"].get("elapsed_ms").is_none());
    let again = bitrade(&["verify", &path]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_fails_on_a_property() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_to(dir.path(), "s3.json", &["--group", "sym:3", "--a", "(1,2,3)", "--b", "(1,2)", "--c", "(2,3)"]);
    assert_eq!(code(&bitrade(&["verify", &path, "--checks", "thin,orthogonal,primary"])), 0);
    let out = bitrade(&["verify", &path, "--checks", "homogeneous", "--format", "text"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("homogeneous  no"));
}

#[test]
fn non_thin_pq_fails_thin_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_to(dir.path(), "pq.json", &["--family", "pq:p=23,q=11,r=4"]);
    let out = bitrade(&["verify", &path, "--checks", "thin"]);
    assert_eq!(code(&out), 1);
    let rep: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rep["thin"]["value"], "no");
    assert!(rep["thin"]["witness"].is_string());
}

#[test]
fn identical_squares_are_not_a_bitrade() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("same.json");
    let cells = r#"[["r1","c1","s1"],["r1","c2","s2"],["r2","c1","s2"],["r2","c2","s1"]]"#;
    fs::write(&path, format!(r#"{{"t_circ": {cells}, "t_star": {cells}}}"#)).unwrap();
    let out = bitrade(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let rep: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rep["bitrade"]["value"], "no");
    assert!(rep["bitrade"]["witness"].as_str().unwrap().contains("R1"));
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["construct", "--group", "sym:3", "--a", "(1,2,3)", "--b", "(1,2)", "--c", "(1,3)"][..],
        &["construct", "--group", "sym:3", "--a", "(1,2,4)", "--b", "(1,2)", "--c", "(2,3)"],
        &["construct", "--family", "zp2:p=4"],
        &["construct", "--family", "pq:p=11,q=5,r=2"],
        &["construct", "--group", "nonsense:3", "--a", "1", "--b", "1", "--c", "1"],
        &["verify", "/nonexistent/file.json"],
        &["verify", "/dev/null", "--checks", "bogus"],
    ] {
        let out = bitrade(args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let g1 = bitrade(&["construct", "--group", "sym:3", "--a", "(1,2,3)", "--b", "(1,2)", "--c", "(1,3)"]);
    assert!(String::from_utf8_lossy(&g1.stderr).contains("G1"));
}

#[test]
fn caps_exit_3() {
    let out = bitrade(&["construct", "--family", "alt:m=2", "--enum-cap", "1000"]);
    assert_eq!(code(&out), 3);
    let env = Command::new(env!("CARGO_BIN_EXE_bitrade"))
        .args(["construct", "--family", "p3:p=5"])
        .env("BITRADE_MAX_ELEMENTS", "100")
        .output()
        .unwrap();
    assert_eq!(code(&env), 3);
    let ok = Command::new(env!("CARGO_BIN_EXE_bitrade"))
        .args(["construct", "--family", "p3:p=5"])
        .env("BITRADE_MAX_ELEMENTS", "125")
        .output()
        .unwrap();
    assert_eq!(code(&ok), 0);
}

#[test]
fn search_lists_triples() {
    let out = bitrade(&["search", "--group", "alt:4", "--k", "3", "--generating"]);
    assert_eq!(code(&out), 0);
    let lines: Vec<serde_json::Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|r| r["orders"] == serde_json::json!([3, 3, 3]) && r["size"] == 12));
    assert_eq!(code(&bitrade(&["search", "--group", "sym:6", "--max-order", "100"])), 3);
}

#[test]
fn table_prints_predictions() {
    let out = bitrade(&["table", "--format", "text"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("k  | p^3"));
    assert!(text.contains("n!/2") || text.contains("16!/2"));
}
