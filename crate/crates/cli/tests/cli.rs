use std::process::{Command, Output};

fn cornerk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cornerk"))
        .args(args)
        .env("CORNERK_LOG", "quiet")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn assert_error(o: &Output, code: i32, prefix: &str) {
    assert_eq!(o.status.code(), Some(code), "{}", stderr(o));
    let err = stderr(o);
    let lines: Vec<&str> = err.lines().filter(|l| l.starts_with("ERROR[")).collect();
    assert_eq!(lines.len(), 1, "{err}");
    assert!(lines[0].starts_with(prefix), "{err}");
}

#[test]
fn e2_text_table() {
    let o = cornerk(&["e2", "--manifold", "cube:2", "--format", "text"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("  0  0  Z\n"), "{out}");
    for row in ["  0  1  0", "  1  0  0", "  1  1  0", "  2  0  0", "  2  1  0"] {
        assert!(out.contains(row), "{out}");
    }
}

#[test]
fn toeplitz_shift() {
    let o = cornerk(&["toeplitz", "--symbol", "1:1"]);
    assert_eq!(stdout(&o), "-1\n");
    let o = cornerk(&["toeplitz", "--symbol", "-2:1"]);
    assert_eq!(stdout(&o), "2\n");
    let o = cornerk(&["toeplitz", "--symbol", "0:2,1:1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["index"], 0);
    assert_eq!(v["winding"], 0);
    let o = cornerk(&["toeplitz", "--symbol", "5:1", "--samples", "64"]);
    assert_eq!(stdout(&o), "-5\n");
}

#[test]
fn toeplitz_errors() {
    assert_error(&cornerk(&["toeplitz", "--symbol", "0:1,1:1"]), 1, "ERROR[toeplitz_index.toeplitz_index]:");
    assert_error(&cornerk(&["toeplitz", "--symbol", "x:1"]), 2, "ERROR[toeplitz_index.parse_symbol]:");
    assert_error(&cornerk(&["toeplitz", "--symbol", "5:1", "--samples", "8"]), 1, "ERROR[toeplitz_index.");
}

#[test]
fn boundary_k1() {
    let o = cornerk(&["boundary-k1", "--k1-sstar", "rank=0"]);
    assert_eq!(stdout(&o), "Z\n");
    let o = cornerk(&["boundary-k1", "--k1-sstar", "Z + Z/2"]);
    assert_eq!(stdout(&o), "Z^2 + Z/2\n");
    assert_error(&cornerk(&["boundary-k1", "--k1-sstar", "Q"]), 2, "ERROR[ktheory_engine.");
}

#[test]
fn pairing() {
    let o = cornerk(&["pairing", "--ring", "torus:2", "--class", "1:1,t1*t2:1", "--dim-f", "1"]);
    assert_eq!(stdout(&o), "-1\n");
    let o = cornerk(&["pairing", "--ring", "torus:2", "--class", "t1*t2:1/2", "--dim-f", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1/2\n");
    assert!(stderr(&o).contains("not an integer"));
    let o = cornerk(&["pairing", "--ring", "cp:2", "--class", "1:1,x:1,x^2:1/2", "--todd", "1:1,x:3/2,x^2:1", "--dim-f", "2"]);
    // ⟨ch(O(1)) Td(CP^2), [CP^2]⟩ = 3
    assert_eq!(stdout(&o), "3\n");
    assert_error(&cornerk(&["pairing", "--ring", "torus:2", "--class", "q:1", "--dim-f", "1"]), 2, "ERROR[char_class.parse_class]:");
    assert_error(&cornerk(&["pairing", "--ring", "klein:2", "--class", "1:1", "--dim-f", "1"]), 2, "ERROR[char_class.load_ring]:");
}

#[test]
fn ring_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t2.json");
    std::fs::write(
        &path,
        r#"{"basis": [{"label": "1", "degree": 0}, {"label": "a", "degree": 1}, {"label": "b", "degree": 1},
            {"label": "ab", "degree": 2}], "products": [["a", "b", {"ab": "1"}]], "top": {"label": "ab"}}"#,
    )
    .unwrap();
    let o = cornerk(&["pairing", "--ring", path.to_str().unwrap(), "--class", "1:1,ab:1", "--dim-f", "1"]);
    assert_eq!(stdout(&o), "-1\n");
}

#[test]
fn sixterm() {
    let o = cornerk(&["sixterm", "--problem", "wiener-hopf", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["slots"]["K0(A)"]["group"]["rank"], 0);
    assert_eq!(v["slots"]["K1(A)"]["status"], "solved");
    assert_eq!(v["complete"], true);
    let o = cornerk(&["sixterm", "--problem", "wiener-hopf:2"]);
    assert!(stdout(&o).contains("K0(A)    Z/2 (solved)"), "{}", stdout(&o));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(&path, r#"{"groups": {"K0(I)": "Z", "K1(I)": "0", "K0(A/I)": "0", "K1(A/I)": "Z"}}"#).unwrap();
    let o = cornerk(&["sixterm", "--problem", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("not determined"));
    std::fs::write(&path, "{").unwrap();
    assert_error(&cornerk(&["sixterm", "--problem", path.to_str().unwrap()]), 2, "ERROR[ktheory_engine.six_term_solve]:");
}

#[test]
fn d1_single_matrix() {
    let o = cornerk(&["d1", "--manifold", "cube:1", "--l", "1", "--i", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["data"], serde_json::json!([1, -1]));
    let o = cornerk(&["d1", "--manifold", "cube:1", "--l", "1", "--i", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"], 0);
    assert_error(&cornerk(&["d1", "--manifold", "cube:1", "--l", "3", "--i", "0"]), 1, "ERROR[");
}

#[test]
fn manifold_errors() {
    assert_error(&cornerk(&["e2", "--manifold", "torus:2"]), 2, "ERROR[corner_complex.load]:");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "[").unwrap();
    assert_error(&cornerk(&["e1", "--manifold", path.to_str().unwrap()]), 2, "ERROR[corner_complex.load]:");
    assert_error(&cornerk(&["e1", "--manifold", "missing.json"]), 2, "ERROR[corner_complex.load]:");
}

#[test]
fn validate_reports_violations() {
    let o = cornerk(&["faces", "--manifold", "cube:2", "--format", "json"]);
    let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let inc = v["incidence"].as_array_mut().unwrap();
    let sign = inc[0][2].as_i64().unwrap();
    inc[0][2] = (-sign).into();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let file = path.to_str().unwrap();
    let o = cornerk(&["validate", "--manifold", file]);
    assert_error(&o, 1, "ERROR[corner_complex.validate]:");
    assert!(stdout(&o).contains("sum to"));
    assert_error(&cornerk(&["e2", "--manifold", file]), 1, "ERROR[corner_complex.e2_page]:");
}

#[test]
fn out_flag_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = cornerk(&["report", "--manifold", "product:cube:1,simplex:2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    let again = cornerk(&["report", "--manifold", "product:cube:1,simplex:2", "--format", "json"]);
    assert_eq!(first, again.stdout);
}

#[test]
fn parse_failures_and_help() {
    assert_error(&cornerk(&["frobnicate"]), 2, "ERROR[cli.parse]:");
    assert_error(&cornerk(&["e2"]), 2, "ERROR[cli.parse]:");
    assert_error(&cornerk(&["e2", "--manifold", "cube:1", "--format", "yaml"]), 2, "ERROR[cli.parse]:");
    assert!(cornerk(&["--help"]).status.success());
    assert!(cornerk(&["--version"]).status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_cornerk"))
        .args(["toeplitz", "--symbol", "1:1"])
        .env("CORNERK_LOG", "loud")
        .output()
        .unwrap();
    assert_error(&o, 2, "ERROR[cli.env]:");
    let o = Command::new(env!("CARGO_BIN_EXE_cornerk"))
        .args(["toeplitz", "--symbol", "1:1"])
        .env("CORNERK_LOG", "info")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "-1\n");
    assert!(stderr(&o).contains("winding"));
}
