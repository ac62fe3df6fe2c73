use std::process::{Command, Output};

fn gchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gchar"))
        .args(args)
        .env_remove("GCHAR_CACHE_DIR")
        .output()
        .expect("run gchar")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = gchar(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn cyclic_table_markdown() {
    let o = gchar(&["table", "--group", "cyclic:3"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("| χ2 | 1 | ζ₃ | ζ₃² |"), "{s}");
    assert!(s.contains("| χ3 | 1 | ζ₃² | ζ₃ |"), "{s}");
}

#[test]
fn cyclic_table_json_is_exact() {
    let v = json(&["table", "--group", "cyclic:3", "--format", "json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["values"].as_array().unwrap().len(), 3);
    assert_eq!(
        v["values"][1][1],
        serde_json::json!({"n": 3, "terms": [[1, 1, 1]]})
    );
}

#[test]
fn holc5_gtable_by_index_and_by_classes() {
    let by_index = json(&[
        "gtable", "--group", "HolC5", "--normal", "2", "--format", "json",
    ]);
    let by_classes = json(&[
        "gtable", "--group", "HolC5", "--normal", "1A+5A", "--format", "json",
    ]);
    assert_eq!(by_index, by_classes);
    let id = by_index["normal_id"].as_str().unwrap().to_string();
    let by_id = json(&[
        "gtable", "--group", "HolC5", "--normal", &id, "--format", "json",
    ]);
    assert_eq!(by_id, by_index);
    let x: Vec<Vec<i64>> = by_index["x"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(integer).collect())
        .collect();
    assert_eq!(x, vec![vec![1, 1], vec![4, -1]]);
}

/// Reads back an integer from the structured cyclotomic form.
fn integer(v: &serde_json::Value) -> i64 {
    match v["terms"].as_array().unwrap().as_slice() {
        [] => 0,
        [t] if t[0] == 0 && t[2] == 1 => t[1].as_i64().unwrap(),
        _ => panic!("not an integer: {v}"),
    }
}

#[test]
fn normals_lists_ids() {
    let v = json(&["normals", "--group", "symmetric:4", "--format", "json"]);
    let orders: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n["order"].as_u64().unwrap())
        .collect();
    assert_eq!(orders, vec![1, 4, 12, 24]);
    assert!(v[1]["id"].as_str().unwrap().len() == 12);
}

#[test]
fn analyze_is_deterministic_and_cache_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let cold = gchar(&[
        "analyze", "--group", "AutD16", "--format", "json", "--seed", "5",
    ]);
    let warm1 = gchar(&[
        "analyze",
        "--group",
        "AutD16",
        "--format",
        "json",
        "--seed",
        "5",
        "--cache-dir",
        cache,
    ]);
    let warm2 = gchar(&[
        "analyze",
        "--group",
        "AutD16",
        "--format",
        "json",
        "--seed",
        "5",
        "--cache-dir",
        cache,
    ]);
    assert!(cold.status.success());
    assert_eq!(cold.stdout, warm1.stdout);
    assert_eq!(cold.stdout, warm2.stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let v: serde_json::Value = serde_json::from_slice(&cold.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], 5);
}

#[test]
fn analyze_with_reps() {
    let v = json(&[
        "analyze", "--group", "HolC5", "--normal", "2", "--reps", "2,5", "--format", "json",
    ]);
    let a = &v["analyses"][0];
    assert_eq!(a["gtable"]["reps"], serde_json::json!([1, 4]));
    assert!(a["oracle_confirmations"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn group_from_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    std::fs::write(
        &path,
        r#"{"degree": 3, "generators": [[2, 1, 3], [2, 3, 1]]}"#,
    )
    .unwrap();
    let v = json(&[
        "table",
        "--group",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(v["group"]["order"], 6);
    assert_eq!(v["classes"]["names"], serde_json::json!(["1A", "2A", "3A"]));
}

#[test]
fn verify_subset_passes() {
    let o = gchar(&[
        "verify",
        "--group",
        "HolC5",
        "--group",
        "symmetric:4",
        "--jobs",
        "2",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks passed"));
}

#[test]
fn verify_algebra_lists_assertions() {
    let v = json(&[
        "verify-algebra",
        "--group",
        "symmetric:4",
        "--normal",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["normals"][0]["assertions"].as_array().unwrap().len(), 8);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["table", "--group", "nosuch"],
        vec!["gtable", "--group", "HolC5"],
        vec!["gtable", "--group", "HolC5", "--normal", "99"],
        vec!["gtable", "--group", "HolC5", "--normal", "1A+2A"],
        vec!["gtable", "--group", "HolC5", "--normal", "2", "--reps", "0"],
        vec![
            "gtable", "--group", "HolC5", "--normal", "2", "--reps", "2,3",
        ],
        vec!["frobnicate"],
    ] {
        let o = gchar(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}
