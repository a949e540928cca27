//! The `extkit` binary end to end.

use std::process::Command;

use serde_json::Value;

fn extkit(args: &[&str]) -> (i32, String, String) {
    extkit_env(args, &[])
}

fn extkit_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_extkit"));
    cmd.args(args).env_remove("EXTKIT_CACHE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = extkit(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn totals(v: &Value) -> Vec<String> {
    let mut t: Vec<String> =
        v["result"]["classes"].as_array().unwrap().iter().map(|c| c["total"].as_str().unwrap().to_string()).collect();
    t.sort();
    t
}

#[test]
fn group_info_q8() {
    let v = json(&["group", "info", "Q8"]);
    assert_eq!(v["result"]["center"], 2);
    assert_eq!(v["result"]["aut"], 24);
    assert_eq!(v["result"]["out"], 6);
    let (code, text, _) = extkit(&["group", "info", "Q8"]);
    assert_eq!(code, 0);
    assert!(text.contains("out: 6"));
}

#[test]
fn classify_goldens() {
    assert_eq!(totals(&json(&["ext", "classify", "C2", "C2", "trivial"])), ["C4", "V4"]);
    assert_eq!(totals(&json(&["ext", "classify", "C2", "C4", "inversion"])), ["D4", "Q8"]);
    assert_eq!(json(&["ext", "classify", "V4", "C2", "central"])["result"]["classes"].as_array().unwrap().len(), 8);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "ext", "classify", "V4", "C2", "central"][..],
        &["group", "info", "D4"][..],
        &["--json", "--seed", "7", "kernel", "obstruction", "C2", "Q8", "trivial"][..],
    ] {
        let a = extkit(args);
        let b = extkit(args);
        assert_eq!(a.0, 0, "{}", a.2);
        assert_eq!(a.1, b.1);
    }
}

#[test]
fn exit_codes() {
    let (code, _, err) = extkit(&["group", "info", "NoSuchGroup"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = extkit(&["--max-order", "4", "group", "info", "Q8"]);
    assert_eq!(code, 3);
    let (code, _, _) = extkit(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, out, _) = extkit(&["--json", "group", "info", "NoSuchGroup"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["error"]["kind"].is_string());
}

#[test]
fn cache_directory_from_env_wins() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    let env = env_dir.path().to_str().unwrap();
    let (code, first, _) = extkit_env(&["--cache-dir", flag, "group", "info", "Q8"], &[("EXTKIT_CACHE", env)]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_dir(env_dir.path()).unwrap().count(), 1);
    assert_eq!(std::fs::read_dir(flag_dir.path()).unwrap().count(), 0);
    let (_, second, _) = extkit_env(&["group", "info", "Q8"], &[("EXTKIT_CACHE", env)]);
    assert_eq!(first, second);
    let (code, _, _) = extkit(&["--cache-dir", flag, "group", "info", "Q8"]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_dir(flag_dir.path()).unwrap().count(), 1);
}

#[test]
fn emitted_classes_rebuild() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, _, err) = extkit(&["ext", "classify", "C2", "C4", "inversion", "--emit", d]);
    assert_eq!(code, 0, "{err}");
    let e0 = dir.path().join("class-0.ext");
    let e1 = dir.path().join("class-1.ext");
    let v = json(&["ext", "equiv", e0.to_str().unwrap(), e1.to_str().unwrap()]);
    assert_eq!(v["result"]["equivalent"], false);
    let v = json(&["ext", "equiv", e0.to_str().unwrap(), e0.to_str().unwrap()]);
    assert_eq!(v["result"]["equivalent"], true);
}
