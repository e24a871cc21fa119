//! Drives the `gpkit` binary end to end on the fixture files.

use std::path::PathBuf;
use std::process::{Command, Output};

use gpkit::classifier::ClassificationReport;
use gpkit::cli_io::{parse_graph_file, GraphFile};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn gpkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpkit")).args(args).output().expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = gpkit(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stderr.is_empty());
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_ok(args)).expect("valid JSON")
}

#[test]
fn classify_p4_json_is_sq_universal() {
    let v = json(&["classify", &fixture("p4.graph"), "--json"]);
    assert_eq!(v["verdicts"]["sqUniversal"], "yes");
    assert_eq!(v["verdicts"]["propertyT"], "no");
    assert_eq!(v["propositionE"]["i"], true);
}

#[test]
fn classify_json_round_trips_through_the_report_type() {
    for f in ["p4.graph", "c4.graph", "c5.graph", "k2_s3.graph", "fp.graph", "mixed.graph"] {
        let text = stdout_ok(&["classify", &fixture(f), "--json"]);
        let report: ClassificationReport = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
        assert_eq!(again, text, "{f}");
    }
}

#[test]
fn named_fixtures_from_the_command_line() {
    let fp = json(&["classify", &fixture("fp.graph"), "--json"]);
    assert_eq!(fp["verdicts"]["sqUniversal"], "yes");
    assert_eq!(fp["verdicts"]["propertyT"], "no");

    let c4 = json(&["classify", &fixture("c4.graph"), "--json"]);
    for key in ["sqUniversal", "manyQuasimorphisms"] {
        assert_eq!(c4["verdicts"][key], "no");
    }
    assert_eq!(c4["verdicts"]["boundedlyGenerated"], "yes");
    assert_eq!(c4["verdicts"]["propertyT"], "no");

    let k2 = json(&["classify", &fixture("k2_s3.graph"), "--json"]);
    assert_eq!(k2["verdicts"]["propertyT"], "yes");

    let c5 = json(&["classify", &fixture("c5.graph"), "--json"]);
    assert_eq!(c5["molecularCorollary"], "no");
}

#[test]
fn word_p3_example() {
    let out = stdout_ok(&["word", &fixture("p3.graph"), "--compute", "a[1]*b[1]*c[1]*b[1]"]);
    assert_eq!(out, "a[1]*c[1]\n");
    let v = json(&["word", &fixture("p3.graph"), "--compute", "a*c*a", "--retract", "a", "c", "--json"]);
    assert_eq!(v["normalForm"], "a[1]*c[1]*a[1]");
    assert_eq!(v["retract"], "a[1]*c[1]*a[1]");
    assert_eq!(v["length"], 3);
}

#[test]
fn tree_wpd_on_free_product() {
    let v = json(&["tree", &fixture("fp.graph"), "-u", "a", "-v", "b", "--wpd", "--json"]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["survivors"], 1);
    assert_eq!(v["onAxis"], serde_json::json!([true, true, true, true]));
    let text = stdout_ok(&["tree", &fixture("fp.graph"), "-u", "a", "-v", "b", "--wpd"]);
    assert!(text.contains("certificate: valid"), "{text}");
}

#[test]
fn tree_axis_matches_ball_minimum() {
    let v = json(&["tree", &fixture("fp.graph"), "-u", "a", "-v", "b", "--axis", "a*b*b", "--radius", "5", "--json"]);
    assert_eq!(v["translationLength"], 2);
    assert_eq!(v["ballMinimumDisplacement"], 2);
    let v = json(&["tree", &fixture("fp.graph"), "-u", "a", "-v", "b", "--axis", "b*a*b^-1", "--json"]);
    assert_eq!(v["elliptic"], true);
    assert_eq!(v["translationLength"], 0);
    assert_eq!(v["ballMinimumDisplacement"], 0);
}

#[test]
fn graph_info_reports_structure() {
    let v = json(&["graph-info", &fixture("c5.graph"), "--json"]);
    assert_eq!(v["molecular"], true);
    assert_eq!(v["girth"], 5);
    assert_eq!(v["sil"], Value::Null);
    assert_eq!(v["complementDegrees"], serde_json::json!([2, 2, 2, 2, 2]));
    assert_eq!(json(&["graph-info", &fixture("p4.graph"), "--json"])["sil"], Value::Null);
    let v = json(&["graph-info", &fixture("star3.graph"), "--json"]);
    assert_eq!(v["sil"]["u"], "a");
    assert_eq!(v["sil"]["v"], "b");
    assert_eq!(v["sil"]["component"], serde_json::json!(["c"]));
    assert_eq!(v["lambda"], serde_json::json!(["x"]));
    let text = stdout_ok(&["graph-info", &fixture("c4.graph")]);
    assert!(text.contains("complete join of pairs: true"), "{text}");
}

#[test]
fn errors_exit_nonzero_with_a_message() {
    let cases: &[&[&str]] = &[
        &["classify", &fixture("self_loop.graph")],
        &["classify", &fixture("bad_table.graph")],
        &["classify", &fixture("missing.graph")],
        &["classify", &fixture("p4.graph"), "--property", "amenable"],
        &["word", &fixture("p3.graph"), "--compute", "z[1]"],
        &["tree", &fixture("p3.graph"), "-u", "a", "-v", "b", "--wpd"],
        &["tree", &fixture("mixed.graph"), "-u", "a", "-v", "c", "--wpd"],
        &["tree", &fixture("fp.graph"), "-u", "a", "-v", "b"],
    ];
    for args in cases {
        let out = gpkit(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn assumed_property_needs_the_flag() {
    let v = json(&["classify", &fixture("p4.graph"), "--property", "amenable", "--assume-conditions-i-v", "--json"]);
    assert_eq!(v["assumedProperty"]["value"], "yes");
}

#[test]
fn table_paths_are_relative_to_the_graph_file() {
    let text = std::fs::read_to_string(fixture("k2_s3.graph")).unwrap();
    let dir = PathBuf::from(fixture("k2_s3.graph")).parent().unwrap().to_owned();
    let lg = parse_graph_file(&text, &dir).unwrap();
    assert_eq!(lg.label(0).finite_order(), Some(6));
    assert!(parse_graph_file(&text, std::path::Path::new("/nonexistent")).is_err());
}

#[test]
fn fixture_files_are_canonical() {
    for f in ["p3.graph", "p4.graph", "c4.graph", "c5.graph", "k2_s3.graph", "mixed.graph"] {
        let text = std::fs::read_to_string(fixture(f)).unwrap();
        assert_eq!(GraphFile::parse(&text).unwrap().to_string(), text, "{f}");
    }
}
