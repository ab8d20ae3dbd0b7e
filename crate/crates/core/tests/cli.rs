use std::process::Command;

use serde_json::Value;

fn psc(job: &str, config: &str, extra: &[&str]) -> (i32, Value, String) {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("job.json");
    let out = dir.path().join("report.json");
    std::fs::write(&cfg, config).unwrap();
    let run = Command::new(env!("CARGO_BIN_EXE_psc"))
        .arg(job)
        .arg("--config")
        .arg(&cfg)
        .arg("--out")
        .arg(&out)
        .args(extra)
        .output()
        .unwrap();
    let report = std::fs::read_to_string(&out).map_or(Value::Null, |s| serde_json::from_str(&s).unwrap());
    let stderr = String::from_utf8_lossy(&run.stderr).into_owned();
    (run.status.code().unwrap(), report, stderr)
}

#[test]
fn bicharacter_job() {
    let cfg = r#"{"cocycle": {"p": 2, "q": 3, "a": "1", "b": "0", "c": "0", "d": "1"}, "window": 30}"#;
    let (code, doc, _) = psc("cocycle-bichar", cfg, &[]);
    assert_eq!(code, 0);
    let r = &doc["report"];
    assert_eq!(r["passed"], true);
    let res = r["results"].as_object().unwrap().values().next().unwrap();
    assert_eq!(res["cocycle"], true);
    assert_eq!(res["obstruction"], "(1)");
    assert!(doc["timing"]["elapsed_us"].is_u64());
}

#[test]
fn order_scan_counts_the_grid() {
    let (code, doc, _) = psc("qn-order-scan", r#"{"shift": 6, "level": 12}"#, &[]);
    assert_eq!(code, 0);
    assert_eq!(doc["report"]["results"]["triples"], 13 * 13 * 12 * 12);
    assert!(doc["report"]["checks"]["agreement"]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn empty_window_succeeds() {
    let (code, doc, _) = psc("twist-assoc", r#"{"window": 0}"#, &[]);
    assert_eq!(code, 0);
    for c in doc["report"]["checks"].as_object().unwrap().values() {
        assert_eq!(c["checked"], 0);
    }
}

#[test]
fn reports_are_deterministic() {
    let cfg = r#"{"samples": 20}"#;
    let (_, a, _) = psc("iso-check", cfg, &["--seed", "9"]);
    let (_, b, _) = psc("iso-check", cfg, &["--seed", "9"]);
    assert_eq!(a["report"], b["report"]);
    assert_eq!(a["report"]["seed"], 9);
}

#[test]
fn failed_check_exits_one() {
    let (code, doc, _) = psc("qn-equal", r#"{"lhs": "s(2)*s(3)", "rhs": "s(6)", "cocycle": {"p": 2, "q": 3, "a": "1", "b": "0", "c": "0", "d": "1"}, "expect_equal": true}"#, &[]);
    assert_eq!(code, 1);
    assert_eq!(doc["report"]["results"]["equal"], false);
}

#[test]
fn rejections_and_schema_errors_exit_two() {
    let (code, doc, _) = psc("qn-pi-witness", r#"{"element": "s(2)*s*(2) + ph(1)*s(2)*s*(2)"}"#, &[]);
    assert_eq!(code, 2);
    assert!(doc["report"]["rejected"][0].as_str().unwrap().contains("not a positive rational"));
    let (code, _, err) = psc("h0-check", r#"{"degree": 10, "colour": 3}"#, &[]);
    assert_eq!(code, 2);
    assert!(err.contains("colour"));
    let (code, _, _) = psc("h0-chek", "{}", &[]);
    assert_eq!(code, 2);
    let (code, _, err) = psc("qn-reduce", r#"{"element": "s(2"}"#, &[]);
    assert_eq!(code, 2);
    assert!(err.contains("parse"));
}
