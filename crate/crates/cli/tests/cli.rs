use std::path::Path;
use std::process::{Command, Output};

fn grouplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grouplab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_then_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d8.txt");
    let path = path.to_str().unwrap();
    let o = grouplab(&["construct", "--kind", "dihedral", "--param", "8", "--out", path]);
    assert_eq!(o.status.code(), Some(0));
    let o = grouplab(&["analyze", path, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["class_sizes"]["1"], 2);
    assert_eq!(v["class_sizes"]["2"], 3);
    assert_eq!(v["subgroups"]["center"]["order"], 2);
    assert_eq!(v["predicates"]["nilpotent"], true);
}

#[test]
fn construct_direct_product() {
    let o = grouplab(&["construct", "--kind", "direct", "--param", "C2, dihedral(6)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("# grouplab-gens v1\ndegree 5\n"));
}

#[test]
fn verify_pass_and_vacuous_exit_zero() {
    let o = grouplab(&["verify", "--theorem", "A", "--p", "2", "--fixture", "builtin:s3_x_s3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "PASS");
    assert!(v["millis"].is_null());

    let o = grouplab(&["verify", "--theorem", "A", "--p", "3", "--fixture", "builtin:a5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("VACUOUS"));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--theorem", "COR", "--fixture", "builtin:q8_x_d8", "--json"];
    assert_eq!(grouplab(&args).stdout, grouplab(&args).stdout);
}

#[test]
fn example_file_feeds_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4.txt");
    let path = path.to_str().unwrap();
    assert_eq!(grouplab(&["example", "--id", "s4_a4_sylow2", "--out", path]).status.code(), Some(0));
    assert!(Path::new(path).exists());
    let o = grouplab(&["verify", "--theorem", "B", "--p", "3", "--fixture", path]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"), "{}", stdout(&o));
}

#[test]
fn cw_gap_reports_failed_claim() {
    let o = grouplab(&["cw-gap", "--group", "builtin:sg300_25", "--p", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("claim FAILS"));
}

#[test]
fn factorize_lists_mp_pairs() {
    let o = grouplab(&["factorize", "symmetric(3)", "--mutually-permutable", "--proper", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["factorizations"].as_array().unwrap().len(), 3);
}

#[test]
fn sweep_small_catalog_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    let o = grouplab(&[
        "sweep", "--catalog", "builtin", "--max-order", "12", "--theorems", "A,C,COR", "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["counts"]["FAIL"], 0);
}

#[test]
fn usage_and_io_errors_exit_one() {
    assert_eq!(grouplab(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(grouplab(&["verify", "--theorem", "Z", "--fixture", "builtin:a5"]).status.code(), Some(1));
    assert_eq!(grouplab(&["analyze", "/nonexistent/group.txt"]).status.code(), Some(1));
    assert_eq!(grouplab(&["example", "--id", "nope"]).status.code(), Some(1));
    assert_eq!(grouplab(&["--help"]).status.code(), Some(0));
}
