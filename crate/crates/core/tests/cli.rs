//! End-to-end tests of the command-line interface: formats, file output,
//! the persistent cache, and the exit-code contract.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_charbasis"))
}

#[test]
fn table_csv_shape() {
    let out = bin()
        .args(["table", "sn", "4", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 6, "header plus five rows");
    assert_eq!(lines[0], "lambda,4,3+1,2+2,2+1+1,1+1+1+1");
    assert!(lines.iter().skip(1).all(|l| l.split(',').count() == 6));
}

#[test]
fn table_an_json_has_quadratic_values() {
    let out = bin()
        .args(["table", "an", "4", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "charbasis/1");
    assert_eq!(doc["classes"].as_array().unwrap().len(), 4);
    let text = doc.to_string();
    assert!(text.contains(r#""delta":-3"#), "surd values present: {text}");
    assert!(text.contains(r#""den":2"#));
}

#[test]
fn verify_json_schema_and_exit() {
    let out = bin()
        .args(["verify", "base", "--w", "1..3", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "charbasis/1");
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for r in reports {
        assert_eq!(r["claim"], "char-ring-basis");
        assert_eq!(r["passed"], true);
        assert!(r["witnesses"]["counts"]["check_unimodular"].is_i64());
        assert!(r["runtime_ms"].is_number());
    }
}

#[test]
fn verify_isometry_reports_signs() {
    let out = bin()
        .args(["verify", "isometry", "--n", "6", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = doc["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    for r in reports {
        let signs = r["witnesses"]["signs"].as_object().unwrap();
        assert!(!signs.is_empty());
        assert!(signs.values().all(|v| v == 1 || v == -1));
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    let out = bin()
        .args(["basicset", "an", "4", "--format", "json"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // the self-conjugate member contributes a plus/minus pair
    let members: Vec<&str> = doc["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m.as_str().unwrap())
        .collect();
    assert!(members.contains(&"2+2+") && members.contains(&"2+2-"));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let run = |cache: &std::path::Path| {
        let out = bin()
            .args(["table", "sn", "6", "--format", "csv"])
            .arg("--cache")
            .arg(cache)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let first = run(dir.path());
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1, "one cache file written");
    let second = run(dir.path());
    assert_eq!(first, second, "cache hit renders identically");

    // environment-variable fallback for the cache directory
    let dir2 = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["table", "sn", "5"])
        .env("CHARBASIS_CACHE", dir2.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(dir2.path()).unwrap().count(), 1);
}

#[test]
fn quotient_json_fields() {
    let out = bin()
        .args(["quotient", "4+2+1", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["core"], serde_json::json!([1]));
    assert_eq!(doc["weight"], 3);
    assert_eq!(doc["member"], false);
}

#[test]
fn blocks_listing() {
    let out = bin().args(["blocks", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("core=1 weight=2"));
    assert!(text.contains("core=2+1 weight=1 members=[4+1, 2+1+1+1]"));
}

#[test]
fn n_max_flag_raises_the_bound() {
    // n = 15 is beyond the default bound but allowed when raised
    let out = bin().args(["basicset", "sn", "15"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "basic set needs no table");

    let out = bin().args(["table", "sn", "15"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["table", "sn", "15", "--n-max", "15", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_range_is_an_internal_error() {
    let out = bin().args(["verify", "sn", "--n", "8..2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn range_flag_sets_both() {
    let out = bin()
        .args(["verify", "all", "--range", "2..3", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = doc["reports"].as_array().unwrap();
    let ns: Vec<i64> = reports
        .iter()
        .filter_map(|r| r["params"]["n"].as_i64())
        .collect();
    let ws: Vec<i64> = reports
        .iter()
        .filter_map(|r| r["params"]["w"].as_i64())
        .collect();
    assert!(ns.iter().all(|&n| (2..=3).contains(&n)));
    assert!(ws.iter().all(|&w| (2..=3).contains(&w)));
    assert!(!ns.is_empty() && !ws.is_empty());
}
