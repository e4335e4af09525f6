use std::process::{Command, Output};

fn divcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divcat")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = divcat(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    divcat(args).status.code().expect("exit code")
}

#[test]
fn enumerate_counts() {
    assert_eq!(stdout(&["enumerate", "--monoid", "io", "--n", "3"]).lines().count(), 20);
    assert_eq!(stdout(&["enumerate", "--monoid", "symmetric", "--n", "3"]).lines().count(), 34);
    let one: Vec<String> =
        stdout(&["enumerate", "--n", "1"]).lines().map(|l| l.split('\t').next().unwrap().to_owned()).collect();
    assert_eq!(one, ["i", "0"]);
    assert_eq!(stdout(&["enumerate", "--n", "9"]).lines().count(), 48620);
}

#[test]
fn enumerate_json_lists_rank_and_domain() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["enumerate", "--n", "2", "--format", "json"])).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 6);
    assert_eq!(items[0]["label"], "i");
    assert_eq!(items[0]["domain"], serde_json::json!([1, 2]));
}

#[test]
fn paper_layout_tables() {
    let e = stdout(&["tables", "--which", "e-cayley", "--n", "3", "--paper-layout", "3"]);
    assert_eq!(e.lines().count(), 9);
    assert!(e.lines().any(|l| l.split_whitespace().collect::<Vec<_>>()
        == ["[1]", "0", "[1]", "[1]", "[1][2]", "[1][3]", "[1][2]", "[1][3]", "0"]));

    let inv = stdout(&["tables", "--which", "inverses", "--n", "3", "--paper-layout", "3", "--format", "csv"]);
    assert!(inv.lines().any(|l| l == "[123],[321]"));

    let rl = stdout(&["tables", "--which", "rl", "--n", "3", "--paper-layout", "3", "--format", "csv"]);
    assert!(rl.lines().any(|l| l == "[12],[2],[1]"));
    assert!(rl.lines().any(|l| l == "[31][2],[1][2],[2][3]"));

    let products = stdout(&["tables", "--which", "cayley", "--paper-layout", "3"]);
    assert_eq!(products.split("\n\n").count(), 4);
}

#[test]
fn paper_layout_only_for_three() {
    assert_eq!(code(&["tables", "--which", "rl", "--n", "4", "--paper-layout", "3"]), 2);
    assert_eq!(code(&["tables", "--which", "rl", "--n", "3", "--paper-layout", "4"]), 2);
}

#[test]
fn hasse_dot_and_green() {
    let dot = stdout(&["tables", "--which", "hasse", "--format", "dot"]);
    assert!(dot.starts_with("digraph hasse {"));
    assert_eq!(dot.matches(" -> ").count(), 12);
    let g: serde_json::Value = serde_json::from_str(&stdout(&["tables", "--which", "green", "--format", "json"])).unwrap();
    assert_eq!(g["h"].as_array().unwrap().len(), 20);
    assert_eq!(g["d"].as_array().unwrap().len(), 4);
}

#[test]
fn category_dump() {
    let text = stdout(&["category", "--n", "3"]);
    assert!(text.contains("Hom(i,[1]) = {([123],i), ([12],i), ([1],i)}"));
    assert!(text.contains("morphisms: 15"));
    assert!(text.contains("quasi-initial: i"));
    let dot = stdout(&["category", "--n", "3", "--format", "dot"]);
    assert_eq!(dot.matches(" -> ").count(), 15);
    let json: serde_json::Value = serde_json::from_str(&stdout(&["category", "--format", "json"])).unwrap();
    assert_eq!(json["objects"], serde_json::json!(["i", "[1]", "[1][2]", "0"]));
}

#[test]
fn category_checks_and_size_guard() {
    let text = stdout(&[
        "category", "--transversal", "0,[2],[1][3],i", "--check", "pushouts", "--check", "transversals", "--check", "sequences",
    ]);
    assert!(text.contains("has pushouts: yes"));
    assert!(text.contains("independent of the transversal: yes"));
    assert!(text.contains("isomorphic to C_n: yes"));
    assert_eq!(code(&["category", "--n", "5", "--check", "pushouts"]), 3);
    assert_eq!(code(&["category", "--n", "5"]), 0);
}

#[test]
fn bad_transversal_is_a_usage_error() {
    assert_eq!(code(&["category", "--transversal", "0,[1],[2],i"]), 2);
    assert_eq!(code(&["category", "--transversal", "0,[9],i"]), 2);
}

#[test]
fn mobius_table() {
    let text = stdout(&["mobius", "--n", "3", "--format", "csv"]);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 15);
    assert!(rows.contains(&"\"(0,i)\",i,0,-1,-1,-1,yes"));
    assert!(rows.iter().all(|r| r.ends_with(",yes")));
    let summary = stdout(&["mobius", "--n", "3"]);
    assert!(summary.contains("holds"));
    let seq = stdout(&["mobius", "--sequences", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&seq).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 31);
}

#[test]
fn verify_exit_codes() {
    let out = stdout(&["verify", "--n", "4"]);
    assert!(out.contains(" 0 failed"));
    assert_eq!(code(&["verify", "--n", "0"]), 2);
    assert_eq!(code(&["verify", "--n", "3", "--format", "dot"]), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["enumerate", "--format", "xml"]), 2);
    assert_eq!(code(&["enumerate", "--n", "10"]), 2);
    assert_eq!(code(&["enumerate", "--monoid", "symmetric", "--n", "8"]), 3);
    assert_eq!(code(&["tables", "--which", "cayley", "--n", "8"]), 3);
}

#[test]
fn output_is_deterministic_and_file_output_matches() {
    let args = ["mobius", "--n", "4", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.dot");
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["category", "--format", "dot", "--output", p]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["category", "--format", "dot"]));
}
