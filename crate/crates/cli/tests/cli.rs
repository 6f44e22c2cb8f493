use std::process::Command;

use jacobi_cli::emit::{parse_series, series_json};
use jacobi_forms::series::{FourierSeries, QExp, YLaurent};
use jacobi_forms::Rat;
use proptest::prelude::*;
use serde_json::Value;

fn jacobi(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_jacobi")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

#[test]
fn expand_text() {
    let (code, out, _) = jacobi(&["expand", "phi_0_4", "--qcap", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "q^0: y + 1 + y^-1; q^1: -y^4 - y^3 + y + 2 + y^-1 - y^-3 - y^-4");
}

#[test]
fn expand_json_lowest_theta_terms() {
    let (code, out, _) = jacobi(&["--format", "json", "expand", "theta", "--qcap", "1"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["series"][0].to_string(), r#"["1/8",[["-1/2","-1"],["1/2","1"]]]"#);
    assert_eq!(v["index"], "1/2");
}

#[test]
fn k3_genus() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(&dir, "k3.json", r#"{"kind": "chi", "d": 2, "chi": [2, -20, 2]}"#);
    let (code, out, _) = jacobi(&["--format", "json", "eg", "--in", &k3]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["decomposition"], "2*phi_0_1");
    assert_eq!(v["euler_number"], "24");
    let (code, out, _) = jacobi(&["congruence", "--in", &k3]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}

#[test]
fn witten_genus_of_k3() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(&dir, "c.json", r#"{"kind": "char", "d": 2, "r": 2, "pairs": {"S2": "-48"}}"#);
    let (code, out, _) = jacobi(&["mwg", "--in", &c]);
    assert_eq!(code, 0);
    assert!(out.starts_with("decomposition: 2*phi_0_1\neuler number: 24\n"), "{out}");
}

#[test]
fn decompose_and_sqeg_from_series_file() {
    let dir = tempfile::tempdir().unwrap();
    let (_, out, _) = jacobi(&["--format", "json", "expand", "xi_0_6", "--qcap", "5"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let body = serde_json::json!({"weight": "0", "index": "6", "qcap": "4", "series": v["series"]});
    let f = write(&dir, "xi.json", &body.to_string());
    let (code, out, err) = jacobi(&["decompose", "--in", &f]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.trim(), "-phi_0_1^2*phi_0_4 + 9*phi_0_1*phi_0_2*phi_0_3 - 8*phi_0_2^3 - 27*phi_0_3^2");

    let (_, out, _) = jacobi(&["--format", "json", "expand", "phi_0_1", "--qcap", "7"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let body = serde_json::json!({"weight": "0", "index": "1", "qcap": "6", "series": v["series"]});
    let g = write(&dir, "g.json", &body.to_string());
    let (code, out, err) = jacobi(&["sqeg", "--in", &g, "--pmax", "2", "--qcap", "3"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("p^0: q^0: 1\np^1: q^0: y + 10 + y^-1;"), "{out}");
}

#[test]
fn special_values() {
    let (code, out, _) = jacobi(&["special", "--form", "phi_0_1", "--z", "1/2", "--qcap", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "q^0: 8; q^1: 256; q^2: 2048");
    let (code, out, _) = jacobi(&["special", "--form", "phi_0_4", "--z", "(t+1)/2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "q^0: -1");
    let (code, _, _) = jacobi(&["special", "--form", "phi_0_1", "--z", "1/5"]);
    assert_eq!(code, 2);
}

#[test]
fn exit_codes() {
    assert_eq!(jacobi(&["check", "--suite", "empty"]).0, 0);
    assert_eq!(jacobi(&["check", "--suite", "series"]).0, 0);
    assert_eq!(jacobi(&["check", "--suite", "literal"]).0, 1);
    assert_eq!(jacobi(&["check", "--suite", "nonexistent"]).0, 2);
    assert_eq!(jacobi(&["expand", "phi_9", "--qcap", "2"]).0, 2);
    assert_eq!(jacobi(&["expand", "phi_0_1", "--qcap", "0"]).0, 2);
    assert_eq!(jacobi(&["eg", "--in", "/nonexistent/file.json"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.json", r#"{"kind": "chi", "d": 2, "chi": [1]}"#);
    assert_eq!(jacobi(&["eg", "--in", &bad]).0, 2);
    let off = write(&dir, "off.json", r#"{"kind": "chi", "d": 1, "chi": [1, -1]}"#);
    assert_eq!(jacobi(&["eg", "--in", &off]).0, 1);
}

#[test]
fn deterministic_output() {
    let a = jacobi(&["--format", "json", "check", "--suite", "core"]);
    let b = jacobi(&["--format", "json", "check", "--suite", "core"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
}

fn arb_series() -> impl Strategy<Value = FourierSeries<YLaurent>> {
    let coeff = (-50i64..50, 1i64..7).prop_map(|(n, d)| Rat::new(n.into(), d.into()));
    let ys = prop::collection::vec((-6i64..7, coeff), 0..5).prop_map(YLaurent::from_terms);
    prop::collection::vec((0i64..96, ys), 0..8)
        .prop_map(|t| FourierSeries::from_terms(t.into_iter().map(|(e, c)| (QExp::from_units(e), c)), QExp::int(4)))
}

proptest! {
    #[test]
    fn json_round_trip(s in arb_series()) {
        let back = parse_series(&series_json(&s), s.cap()).unwrap();
        prop_assert_eq!(back, s);
    }
}
