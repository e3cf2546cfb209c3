use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;

use nilcone_cli::schema::{ClassifyResult, CountResult, HeckeResult, MultJson, PairResult, Report, RootInfo, ScanResult};
use nilcone_cli::{render_text, run, Outcome};
use serde::de::DeserializeOwned;
use serde_json::Value;
use tempfile::NamedTempFile;

fn nilcone(args: &[&str]) -> Outcome {
    run(std::iter::once("nilcone").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = nilcone(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn chain_file(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

/// Parses into the typed schema and checks re-serialization is lossless.
fn round_trip<T: DeserializeOwned + serde::Serialize>(stdout: &str) -> Report<T> {
    let report: Report<T> = serde_json::from_str(stdout).unwrap();
    let again: Value = serde_json::to_value(&report).unwrap();
    assert_eq!(again, serde_json::from_str::<Value>(stdout).unwrap());
    assert_eq!(report.schema, 1);
    report
}

const DOUBLE_ZERO: &str = r#"{"genus": 3, "degrees": [0, -1], "delta0": {}, "zeros": [{"p": 2, "q": 1}]}"#;
const SIMPLE_ZEROS: &str = r#"{"genus": 3, "degrees": [0, -1, -3], "delta0": {}, "zeros": [{"a": 1, "b": 2}, {"c": 1, "d": 1}]}"#;

#[test]
fn classify_reports_repeated_zero() {
    let f = chain_file(DOUBLE_ZERO);
    let out = ok(&["classify", "--chain-file", f.path().to_str().unwrap()]);
    let r: Report<ClassifyResult> = round_trip(&out);
    assert!(!r.result.very_stable);
    assert!(r.result.stable);
    assert_eq!(r.result.reason.as_deref(), Some("repeated zero at p"));
}

#[test]
fn classify_very_stable_chain() {
    let f = chain_file(r#"{"genus": 3, "degrees": [0, -1, -3], "delta0": {}, "zeros": [{"a": 1, "b": 1, "e": 1}, {"c": 1, "d": 1}]}"#);
    let out = ok(&["classify", "--chain-file", f.path().to_str().unwrap()]);
    let r: Report<ClassifyResult> = round_trip(&out);
    assert!(r.result.very_stable);
    assert_eq!(r.result.reason, None);
    assert_eq!(r.result.m, vec![3, 2]);
}

#[test]
fn mult_gl_type_n() {
    let out = ok(&["mult", "gl", "--g", "2", "--n", "2", "--type", "n"]);
    let r: Report<MultJson> = round_trip(&out);
    assert_eq!(r.result.polynomial, Some(vec!["1".into(), "3".into(), "3".into(), "1".into()]));
    assert_eq!(r.result.value_at_1.as_deref(), Some("8"));
    assert!(r.result.palindromic);
    assert_eq!(r.command, "mult gl");
}

#[test]
fn mult_gl_chain_and_type12() {
    let out = ok(&["mult", "gl", "--g", "3", "--type", "chain", "--m", "1,1"]);
    let r: Report<MultJson> = round_trip(&out);
    assert_eq!(r.result.value_at_1.as_deref(), Some("9"));
    let out = ok(&["mult", "gl", "--g", "3", "--n", "3", "--type", "type12", "--twol-minus-v", "4"]);
    let r: Report<MultJson> = round_trip(&out);
    assert_eq!(r.result.polynomial, None);
    assert!(r.result.not_polynomial_witness_degree.is_some());
    assert_eq!(r.result.value_at_1, None);
}

#[test]
fn scan_g2_bound_one() {
    let out = ok(&["scan", "--type", "G", "--rank", "2", "--bound", "1"]);
    let r: Report<ScanResult> = round_trip(&out);
    assert_eq!(r.result.total, 4);
    let nonzero: Vec<_> = r.result.entries.iter().filter(|e| !e.m.is_zero()).collect();
    assert_eq!(nonzero.len(), 3);
    assert!(nonzero.iter().all(|e| e.polynomial.is_none()));
}

#[test]
fn mult_simple_and_rootinfo() {
    let out = ok(&["mult", "simple", "--type", "C", "--rank", "2", "--m", "0,1"]);
    let r: Report<MultJson> = round_trip(&out);
    assert_eq!(r.result.value_at_1.as_deref(), Some("4"));
    let out = ok(&["rootinfo", "--type", "C", "--rank", "2"]);
    let r: Report<RootInfo> = round_trip(&out);
    assert_eq!(r.result.cartan, vec![vec![2, -1], vec![-2, 2]]);
    assert_eq!(r.result.degrees, vec![2, 4]);
    assert_eq!(r.result.positive_roots.len(), 4);
    assert_eq!(r.result.cominuscule_nodes, vec![2]);
}

#[test]
fn hecke_moves_inline() {
    let f = chain_file(SIMPLE_ZEROS);
    let moves = r#"[{"op": "remove", "i_or_k": 1, "point": "a"}, {"op": "add", "i_or_k": 2, "point": "x"}]"#;
    let out = ok(&["hecke", "--chain-file", f.path().to_str().unwrap(), "--moves", moves]);
    let r: Report<HeckeResult> = round_trip(&out);
    assert_eq!(r.result.steps.len(), 2);
    assert_eq!(r.result.steps[0].degrees, vec![0, -2, -4]);
    assert_eq!(r.result.chain.degrees, vec![-1, -2, -4]);
    assert!(r.result.steps.iter().all(|s| s.stable));
}

#[test]
fn count_and_enumerate() {
    let f = chain_file(r#"{"genus": 3, "degrees": [0, -3, -5], "delta0": {}, "zeros": [{"a": 1}, {"b": 1, "c": 1}]}"#);
    let path = f.path().to_str().unwrap();
    let out = ok(&["count", "--chain-file", path, "--enumerate", "--list"]);
    let r: Report<CountResult> = round_trip(&out);
    // C(3,1)^1 C(3,2)^2
    assert_eq!(r.result.count, "27");
    assert_eq!(r.result.enumerated, Some(27));
    let listed = r.result.assignments.unwrap();
    let distinct: BTreeSet<String> = listed.iter().map(|a| serde_json::to_string(a).unwrap()).collect();
    assert_eq!(distinct.len(), 27);
    let out = nilcone(&["count", "--chain-file", path, "--enumerate", "--cap", "10"]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("ResourceError"));
}

#[test]
fn pair_symmetric() {
    let out = ok(&["pair", "--g", "2", "--n", "2", "--a", "1", "--b", "1", "--order", "3"]);
    let r: Report<PairResult> = round_trip(&out);
    assert_eq!(r.result.series, vec!["1", "2", "6", "10"]);
    assert_eq!(r.result.prefactor_exponent, 3);
    assert!(r.result.symmetric);
}

#[test]
fn exit_codes_and_stderr() {
    let out = nilcone(&["mult", "gl", "--g", "1", "--n", "2", "--type", "n"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("DomainError") && out.stderr.contains("[field: g]"), "{}", out.stderr);
    let out = nilcone(&["mult", "gl", "--g", "2", "--n", "3", "--type", "21"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("UnsupportedType"));
    let f = chain_file(r#"{"genus": 2, "degrees": [0, 0], "zeros": [{"p": 1}]}"#);
    let out = nilcone(&["classify", "--chain-file", f.path().to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("InvariantError") && out.stderr.contains("deg(delta_i)==m_i"));
    let out = nilcone(&["scan", "--type", "E", "--rank", "8", "--bound", "6"]);
    assert_eq!(out.code, 3);
    assert!(out.stdout.is_empty());
    for bad in [&["frobnicate"][..], &["scan", "--type", "A", "--rank", "2", "--bound", "1", "--nope"]] {
        let out = nilcone(bad);
        assert_eq!(out.code, 64);
        assert!(out.stderr.contains("Usage"));
    }
    let out = nilcone(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("Bourbaki"));
}

#[test]
fn unstable_hecke_addition_is_reported() {
    let f = chain_file(r#"{"genus": 2, "degrees": [0, -2], "delta0": {}, "zeros": [{}]}"#);
    let out = nilcone(&["hecke", "--chain-file", f.path().to_str().unwrap(), "--moves", r#"[{"op":"add","i_or_k":1,"point":"p"},{"op":"add","i_or_k":1,"point":"q"}]"#]);
    assert_eq!(out.code, 2, "{}", out.stdout);
    assert!(out.stderr.contains("UnstableResult"));
}

#[test]
fn json_is_byte_stable_and_timing_is_opt_in() {
    let args = ["mult", "simple", "--type", "E", "--rank", "6", "--m", "1,0,0,0,0,0"];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
    assert!(!a.contains("timing_ms"));
    let mut timed = args.to_vec();
    timed.push("--timing");
    let r: Report<MultJson> = round_trip(&ok(&timed));
    assert!(r.timing_ms.is_some());
}

fn leaves(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => m.values().for_each(|x| leaves(x, out)),
        Value::Array(a) => a.iter().for_each(|x| leaves(x, out)),
        Value::String(s) => out.push(s.clone()),
        other => out.push(other.to_string()),
    }
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let f = chain_file(SIMPLE_ZEROS);
    let chain = f.path().to_str().unwrap().to_string();
    let cases: Vec<Vec<&str>> = vec![
        vec!["mult", "gl", "--g", "2", "--n", "3", "--type", "n"],
        vec!["rootinfo", "--type", "G", "--rank", "2"],
        vec!["scan", "--type", "A", "--rank", "2", "--bound", "2"],
        vec!["classify", "--chain-file", &chain],
        vec!["pair", "--g", "3", "--n", "2", "--a", "1,2,1", "--b", "1", "--order", "6"],
    ];
    for args in cases {
        let json: Value = serde_json::from_str(&ok(&args)).unwrap();
        let mut text_args = args.clone();
        text_args.extend(["--format", "text"]);
        let text = ok(&text_args);
        assert_eq!(text, render_text(&json).replace(&args.join(" "), &text_args.join(" ")));
        let numeric = |s: &str| s.parse::<i64>().is_ok();
        let mut from_json = vec![];
        leaves(&json["result"], &mut from_json);
        let from_json: Vec<String> = from_json.into_iter().filter(|s| numeric(s)).collect();
        let from_text: Vec<String> = text
            .lines()
            .filter(|l| l.starts_with("result."))
            .flat_map(|l| l.split_whitespace().skip(1).map(str::to_string).collect::<Vec<_>>())
            .filter(|s| numeric(s))
            .collect();
        assert_eq!(from_json, from_text, "{args:?}");
    }
}

#[test]
fn binary_matches_library() {
    let out = Command::new(env!("CARGO_BIN_EXE_nilcone"))
        .args(["mult", "gl", "--g", "2", "--n", "3", "--type", "n"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), ok(&["mult", "gl", "--g", "2", "--n", "3", "--type", "n"]));
    let out = Command::new(env!("CARGO_BIN_EXE_nilcone")).arg("bogus").output().unwrap();
    assert_eq!(out.status.code(), Some(64));
}
