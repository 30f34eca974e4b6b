use assert_cmd::Command;
use predicates::prelude::*;

fn cli() -> Command {
    Command::cargo_bin("icosa-a5").unwrap()
}

const D: &str = "(1,3,2+)(2,3',1')(2',1'',3'')(1+,2'',3+)";
const A: &str = "(1,1+,2'')(2,1'',1')(3,3',2+)(2',3'',3+)";

fn stdout(args: &[&str]) -> String {
    let out = cli()
        .args(args)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    String::from_utf8(out).unwrap()
}

#[test]
fn map_a5_three_cycle_to_rotation() {
    assert_eq!(
        stdout(&["map", "(1,4,5)", "--from", "a5"]),
        format!("{D}\n")
    );
}

#[test]
fn map_rotation_to_a5() {
    assert_eq!(stdout(&["map", D, "--from", "ico"]), "(1,4,5)\n");
}

#[test]
fn map_requires_direction() {
    cli().args(["map", "(1,4,5)"]).assert().code(2);
}

#[test]
fn word_for_a_is_short_and_certified() {
    let word = stdout(&["word", A]);
    let word = word.trim();
    assert!(word.len() <= 4, "{word}");
    assert_eq!(word, "YYT");
}

#[test]
fn word_on_a5_side_uses_same_generators() {
    assert_eq!(stdout(&["word", "(1,4,5)"]), "D\n");
    assert_eq!(stdout(&["word", ""]), "-\n");
    // The identity has no cycles, so it maps to an empty line.
    assert_eq!(stdout(&["map", "", "--from", "a5"]), "\n");
}

#[test]
fn classify_rejects_odd_permutation() {
    cli()
        .args(["classify", "(1,2)"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("not in A5"));
}

#[test]
fn classify_reports_kind_axis_and_partner() {
    let out = stdout(&["classify", "(1,2)(3,4)"]);
    assert!(out.contains("class:    edge"), "{out}");
    assert!(out.contains("order:    2"));
    assert!(out.contains("a5:       (1,2)(3,4)"));

    let x = "(1,2,3)(1',2',3')(1+,2+,3+)(1'',2'',3'')";
    let out = stdout(&["classify", x]);
    assert!(out.contains("class:    face"), "{out}");
    assert!(out.contains("axis:     {1,2,3} {1'',2'',3''}"));
    assert!(out.contains("a5:       (1,2,3)"));

    let out = stdout(&["classify", "", "--domain", "ico"]);
    assert!(out.contains("class:    identity"), "{out}");
    assert!(out.contains("axis:     -"));

    cli()
        .args(["classify", "(1,2,3)", "--domain", "ico"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("not a rotation"));
}

#[test]
fn unknown_label_names_token_and_column() {
    cli()
        .args(["classify", "(1,6)"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("column 4").and(predicates::str::contains("\"6\"")));
    cli()
        .args(["map", "(1,2')", "--from", "a5"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("\"2'\""));
    cli()
        .args(["word", "(1,2,7+)"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("\"7+\""));
}

#[test]
fn non_rotation_is_rejected() {
    cli()
        .args(["classify", "(1,2)(1'',2'')"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("not a rotation"));
}

#[test]
fn verify_passes_and_json_is_stable() {
    let first = cli()
        .args(["verify", "--json"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let second = cli()
        .args(["verify", "--json"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    assert_eq!(first, second);
    let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["total"], v["checks"].as_array().unwrap().len());
}

#[test]
fn verify_single_table() {
    let out = stdout(&["verify", "--table", "3"]);
    assert!(out.contains("table3/TD"));
    assert!(
        out.ends_with("15 checks: 15 pass, 0 fail, 0 errata\n"),
        "{out}"
    );
    cli().args(["verify", "--table", "0"]).assert().code(2);
}

#[test]
fn tables_text_and_json() {
    let text = stdout(&["tables", "--table", "2", "--text"]);
    assert!(text.starts_with("Table 2:"));
    assert!(text.contains("(1,3,5)   C^2"), "{text}");

    let json = stdout(&["tables", "--table", "7", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = v[0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 24);
    assert_eq!(rows[0]["a5_cycle"], "(1,2,3,4,5)");
    assert_eq!(rows[0]["power"], "Q6^3");

    cli().args(["tables", "--json", "--text"]).assert().code(2);
}

#[test]
fn graph_dump_counts() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["graph", "--json"])).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 12);
    assert_eq!(v["edges"].as_array().unwrap().len(), 30);
    assert_eq!(v["faces"].as_array().unwrap().len(), 20);
    assert_eq!(v["antipodal_pairs"].as_array().unwrap().len(), 6);
    assert!(stdout(&["graph"]).starts_with("vertices (12): 1 2 3 1' 2' 3' 1+ 2+ 3+ 1'' 2'' 3''\n"));
}

#[test]
fn correspondence_json_schema() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["correspondence", "--json"])).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 60);
    let keys: Vec<&str> = rows[0]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    for k in [
        "word",
        "rotation_cycles",
        "class",
        "axis",
        "a5_cycles",
        "a5_class",
    ] {
        assert!(keys.contains(&k), "{k}");
    }
    assert_eq!(rows[0]["class"], "identity");
    assert_eq!(rows[59]["class"], "vertex");
}

#[test]
fn output_is_ascii() {
    for args in [
        &["verify"][..],
        &["tables"],
        &["graph"],
        &["correspondence"],
    ] {
        assert!(stdout(args).is_ascii(), "{args:?}");
    }
}
