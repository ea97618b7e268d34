use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn selfdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfdual")).args(args).env_remove("SELFDUAL_CATALOG").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn factors(v: &Value) -> Vec<(String, u64)> {
    v["factors"].as_array().unwrap().iter().map(|f| (f["poly"].as_str().unwrap().to_string(), f["mult"].as_u64().unwrap())).collect()
}

/// Records keyed by their `key` object, with timestamps removed.
fn records(path: &Path) -> BTreeMap<String, Value> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).unwrap();
            v["provenance"].as_object_mut().unwrap().remove("timestamp");
            (v["key"].to_string(), v)
        })
        .collect()
}

#[test]
fn factor_examples() {
    let v = json(&selfdual(&["factor", "--p", "5", "--s", "1", "--n", "10", "--constant", "-1", "--json"]));
    assert_eq!(factors(&v), vec![("3 + 1*x".to_string(), 5), ("2 + 1*x".to_string(), 5)]);
    assert_eq!((v["self_reciprocal_count"].as_u64(), v["pair_count"].as_u64()), (Some(0), Some(1)));
    assert_eq!(v["field"]["p"], 5);

    let v = json(&selfdual(&["factor", "--p", "3", "--s", "1", "--n", "6", "--constant", "-1", "--json"]));
    assert_eq!(factors(&v), vec![("1 + 1*x^2".to_string(), 3)]);
    assert_eq!((v["self_reciprocal_count"].as_u64(), v["pair_count"].as_u64()), (Some(1), Some(0)));

    let v = json(&selfdual(&["factor", "--p", "2", "--s", "1", "--n", "6", "--constant", "1", "--json"]));
    assert_eq!(factors(&v), vec![("1 + 1*x".to_string(), 2), ("1 + 1*x + 1*x^2".to_string(), 2)]);

    let text = stdout(&selfdual(&["factor", "--p", "5", "--n", "10"]));
    assert!(text.lines().last().unwrap() == "s=0 t=1", "{text}");
}

#[test]
fn json_outputs_are_canonical() {
    for args in [
        &["factor", "--p", "3", "--s", "2", "--n", "12", "--json"][..],
        &["order", "--q", "5", "--m", "13", "--json"],
        &["exists", "--p", "5", "--n", "10", "--json"],
        &["enumerate", "--p", "3", "--s", "2", "--n", "6", "--json"],
        &["verify", "--p", "7", "--n", "14", "--json"],
    ] {
        let o = selfdual(args);
        let text = stdout(&o);
        let v: Value = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), text.trim(), "{args:?}");
    }
    assert_eq!(json(&selfdual(&["order", "--q", "5", "--m", "13", "--json"]))["order"], 4);
}

#[test]
fn exists_count_enumerate() {
    let text = stdout(&selfdual(&["exists", "--p", "5", "--s", "1", "--n", "10"]));
    assert!(text.contains("exists: true") && text.contains("count: 6"), "{text}");

    let text = stdout(&selfdual(&["exists", "--p", "3", "--s", "1", "--n", "6"]));
    assert!(text.contains("exists: false") && text.contains("count: 0"), "{text}");

    let o = selfdual(&["exists", "--p", "3", "--s", "2", "--n", "30", "--verify", "--json"]);
    let v = json(&o);
    assert_eq!(v["oracle_checked"], true);
    let count = v["result"]["count"].as_u64().unwrap();
    assert_eq!(v["result"]["exists"], count > 0);

    let o = selfdual(&["enumerate", "--p", "5", "--n", "10"]);
    assert_eq!(stdout(&o).lines().count(), 6);
    assert_eq!(stdout(&selfdual(&["count", "--p", "2", "--n", "6", "--constant", "1"])).lines().next(), Some("count: 1"));
}

#[test]
fn exit_codes() {
    let o = selfdual(&["exists", "--p", "2", "--n", "6", "--constant", "-1"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(selfdual(&["factor", "--p", "2", "--n", "6"]).status.code(), Some(3));
    for args in [
        &["factor", "--p", "4", "--n", "6"][..],
        &["factor", "--p", "5", "--n", "0"],
        &["factor", "--p", "5", "--n", "6", "--constant", "2"],
        &["exists", "--p", "5"],
        &["order", "--q", "5", "--m", "10"],
        &["bogus"],
    ] {
        let o = selfdual(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = selfdual(&["factor", "--p", "4", "--n", "6"]);
    assert_eq!(String::from_utf8(o.stderr).unwrap().lines().count(), 1);
    assert_eq!(selfdual(&["verify", "--p", "5", "--n", "10"]).status.code(), Some(0));
}

#[test]
fn claims_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("claims.jsonl");
    let o = selfdual(&["claims", "--max-n", "12", "--json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), line);
    }
    assert!(text.contains("\"claim_id\":\"example-70-F5\""));

    let table = stdout(&selfdual(&["claims", "--max-n", "12"]));
    for id in ["example-70-F5", "example-30-F9", "example-126-F9"] {
        assert!(table.lines().any(|l| l.starts_with(id)), "{id}");
    }

    let bad = dir.path().join("missing").join("claims.txt");
    let o = selfdual(&["claims", "--max-n", "4", "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_is_idempotent_and_regenerates_deleted_lines() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("catalog.jsonl");
    let c = cat.to_str().unwrap();
    let args = ["sweep", "--p-list", "3,5", "--s-max", "2", "--n-max", "20", "--catalog", c];
    assert_eq!(selfdual(&args).status.code(), Some(0));
    let first = fs::read_to_string(&cat).unwrap();
    assert_eq!(first.lines().count(), 80);
    assert!(first.ends_with('\n') && !first.contains('\r'));

    let o = selfdual(&args);
    assert!(stdout(&o).contains("computed: 0"));
    assert_eq!(fs::read_to_string(&cat).unwrap(), first);

    let mut lines: Vec<&str> = first.lines().collect();
    let removed = lines.remove(17).to_string();
    fs::write(&cat, lines.join("\n") + "\n").unwrap();
    let o = selfdual(&args);
    assert!(stdout(&o).contains("computed: 1"), "{}", stdout(&o));
    let after = records(&cat);
    assert_eq!(after, records_of(&first));
    let key: Value = serde_json::from_str(&removed).unwrap();
    let mut expect: Value = serde_json::from_str(&removed).unwrap();
    expect["provenance"].as_object_mut().unwrap().remove("timestamp");
    assert_eq!(after[&key["key"].to_string()], expect);
}

fn records_of(text: &str) -> BTreeMap<String, Value> {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.jsonl");
    fs::write(&path, text).unwrap();
    records(&path)
}

#[test]
fn sweep_verify_and_environment_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("env.jsonl");
    let o = Command::new(env!("CARGO_BIN_EXE_selfdual"))
        .args(["sweep", "--p-list", "3", "--n-max", "12"])
        .env("SELFDUAL_CATALOG", &cat)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(records(&cat).values().all(|r| r["provenance"]["oracle_checked"] == false));

    let c = cat.to_str().unwrap();
    assert_eq!(selfdual(&["sweep", "--p-list", "3", "--n-max", "12", "--catalog", c, "--verify"]).status.code(), Some(0));
    let recs = records(&cat);
    assert_eq!(recs.len(), 12);
    assert!(recs.values().all(|r| r["provenance"]["oracle_checked"] == true));

    assert_eq!(selfdual(&["sweep", "--p-list", "3", "--n-max", "4"]).status.code(), Some(2));
}

#[test]
fn queries_record_into_the_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("q.jsonl");
    let c = cat.to_str().unwrap();
    assert_eq!(selfdual(&["exists", "--p", "5", "--n", "10", "--catalog", c]).status.code(), Some(0));
    assert_eq!(selfdual(&["count", "--p", "5", "--n", "10", "--catalog", c]).status.code(), Some(0));
    let recs = records(&cat);
    assert_eq!(recs.len(), 1);
    let r = recs.values().next().unwrap();
    assert_eq!(r["result"]["count"], 6);
    assert_eq!(r["result"]["generators"].as_array().unwrap().len(), 6);
}

#[test]
fn corrupt_catalog_exits_five() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("bad.jsonl");
    let c = cat.to_str().unwrap();
    assert_eq!(selfdual(&["sweep", "--p-list", "5", "--n-max", "3", "--catalog", c]).status.code(), Some(0));
    let mut text = fs::read_to_string(&cat).unwrap();
    text.push_str("garbage\n");
    fs::write(&cat, text).unwrap();
    let o = selfdual(&["sweep", "--p-list", "5", "--n-max", "3", "--catalog", c]);
    assert_eq!(o.status.code(), Some(5));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 4"));
    assert_eq!(selfdual(&["exists", "--p", "5", "--n", "2", "--catalog", c]).status.code(), Some(5));
}
