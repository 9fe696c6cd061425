//! The command line through `cli::run`, with captured output.

use jetspace::cli::run;
use serde_json::Value;

fn jetspace(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv: Vec<&str> = std::iter::once("jetspace").chain(args.iter().copied()).collect();
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("jetspace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn verify_all_small_is_green() {
    let (code, out, err) = jetspace(&["verify", "all", "--p", "3", "--e", "1", "--n", "1", "--D", "64", "--samples", "40"]);
    assert_eq!(code, 0, "{err}\n{out}");
    assert!(!out.contains("[RED]"));
}

#[test]
fn p_two_main_theorem_is_red() {
    let (code, out, _) = jetspace(&["verify", "main", "--p", "2", "--e", "1", "--n", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("kernel [2, 2] vs W_0(C)_+ [4]"), "{out}");
    assert!(out.contains("no additive certificate"));
}

#[test]
fn config_errors_exit_two() {
    let bad_catalog = temp("bad-catalog.json", r#"{"algebras": [{"m": 2, "extra": true}]}"#);
    let (code, _, err) = jetspace(&["verify", "main", "--algebras", bad_catalog.to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
    let bad_config = temp("bad-config.json", r#"{"p": 3, "colour": "blue"}"#);
    assert_eq!(jetspace(&["verify", "witt", "--config", bad_config.to_str().unwrap()]).0, 2);
    assert_eq!(jetspace(&["verify", "witt", "--p", "9"]).0, 2);
    assert_eq!(jetspace(&["verify", "witt", "--e", "2", "--eisenstein", "1,0,-9"]).0, 2);
    assert_eq!(jetspace(&["verify", "witt", "--e", "2", "--eisenstein", "1,3,6"]).0, 2);
    assert_eq!(jetspace(&["verify", "witt", "--n", "3..1"]).0, 2);
    assert_eq!(jetspace(&["no-such-command"]).0, 2);
    let huge = temp("huge.json", r#"{"algebras": [{"m": 30}]}"#);
    assert_eq!(jetspace(&["verify", "main", "--algebras", huge.to_str().unwrap()]).0, 2);
}

#[test]
fn config_file_fills_flags_and_flags_win() {
    let cfg = temp("run.json", r#"{"p": 5, "e": 1, "n": "1..2", "seed": 7, "format": "json"}"#);
    let (code, out, err) = jetspace(&["verify", "witt", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
    assert!(v["reports"][0]["case"].as_str().unwrap().contains("p=5"));
    let (_, out, _) = jetspace(&["verify", "witt", "--config", cfg.to_str().unwrap(), "--p", "3", "--n", "1"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["reports"][0]["case"].as_str().unwrap().contains("p=3"));
}

#[test]
fn report_file_has_the_schema() {
    let dir = std::env::temp_dir().join(format!("jetspace-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let (code, _, _) =
        jetspace(&["verify", "shifted", "--n", "2", "--seed", "11", "--samples", "20", "--report", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["seed"], 11);
    let rep = &v["reports"][0];
    assert!(rep["case"].is_string());
    for c in rep["checks"].as_array().unwrap() {
        assert!(c["name"].is_string());
        assert_eq!(c["status"], "green");
        assert!(c.get("witness").is_some());
    }
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["verify", "main", "--n", "1", "--seed", "5", "--format", "json"];
    assert_eq!(jetspace(&args).1, jetspace(&args).1);
}

#[test]
fn witt_poly_dump() {
    let (code, out, _) = jetspace(&["witt-poly", "--p", "3", "--e", "1", "--n", "1", "--op", "add"]);
    assert_eq!(code, 0);
    assert!(out.contains("S_1 = -x0^2*y0 - x0*y0^2 + x1 + y1"), "{out}");
    let (_, out, _) = jetspace(&["witt-poly", "--n", "1", "--op", "mul", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    // P_0 = x0 y0 has a single term with coefficient [1].
    assert_eq!(v["terms"][0][0]["coeff"], serde_json::json!([1]));
    assert_eq!(v["terms"][0][0]["monomial"]["x0"], 1);
}

#[test]
fn ghost_and_lateral() {
    let (_, out, _) = jetspace(&["ghost", "--p", "3", "1", "2", "3"]);
    assert_eq!(out, "w_0 = 1\nw_1 = 7\nw_2 = 52\n");
    let (code, out, _) = jetspace(&["lateral", "--head", "1", "2", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("(head 1; 17)"), "{out}");
    let (code, out, _) = jetspace(&["lateral", "--n", "3", "--iterate", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(F+)^2 first entry = b1^9 + 3*b2^3 + 9*b3\n");
}

#[test]
fn jet_coords() {
    let (_, out, _) = jetspace(&["jet-coords", "--n", "2"]);
    assert!(out.contains("p_2 = x^6*x' + 3*x^3*x'^2 + 3*x'^3 + x''"), "{out}");
    let (code, out, _) = jetspace(&["jet-coords", "--n", "3", "--kind", "kernel", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["names"].as_array().unwrap().len(), 3);
}

#[test]
fn group_law_ops() {
    let (code, out, _) = jetspace(&["group-law", "--op", "certify", "--builtin", "gm", "--scale", "1", "--D", "64"]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = jetspace(&["group-law", "--op", "certify", "--builtin", "gm", "--scale", "1", "--D", "64", "--p", "3", "--e", "2"]);
    assert_eq!(code, 1);
    let (_, out, _) = jetspace(&["group-law", "--op", "kernel", "--builtin", "gm", "--D", "3"]);
    assert_eq!(out.trim(), "3*x*y + x + y");
    let law = r#"{"D": 4, "monomials": [[1, 0, ["1"]], [0, 1, ["1"]], [1, 1, ["-1/1"]]]}"#;
    let path = temp("law.json", law);
    let (code, out, _) = jetspace(&["group-law", "--op", "validate", "--law", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let bad = temp("bad-law.json", r#"{"D": 4, "monomials": [], "x": 1}"#);
    assert_eq!(jetspace(&["group-law", "--op", "log", "--law", bad.to_str().unwrap()]).0, 2);
}
