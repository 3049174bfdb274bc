use std::path::Path;
use std::process::Command;

use crosskit_cli::{run, CommandOutcome, DEFAULT_SEED};

fn crosskit(args: &[&str]) -> CommandOutcome {
    run(std::iter::once("crosskit").chain(args.iter().copied()), None)
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

#[test]
fn zarankiewicz_k57_has_36_crossings() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "d.crdraw.json");
    assert_eq!(crosskit(&["gen", "zarankiewicz", "5", "7", "-o", &file]).code, 0);
    let counted = crosskit(&["count", &file]);
    assert_eq!((counted.code, counted.summary.as_str()), (0, "36"));
    assert_eq!(crosskit(&["validate", &file]).code, 0);
}

#[test]
fn written_drawings_round_trip_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "c.crdraw.json");
    assert_eq!(crosskit(&["gen", "cylinder", "3", "4", "-o", &file]).code, 0);
    let text = std::fs::read_to_string(&file).unwrap();
    let d = crosskit_map::decode(text.as_bytes()).unwrap();
    assert_eq!(crosskit_map::encode(&d), text);
    assert_eq!(d.crossings_total(), 14);
}

#[test]
fn thm1_on_the_cylinder_gives_24() {
    let out = crosskit(&["verify", "thm1", "--m", "4", "--n", "4", "--source", "cylinder"]);
    assert_eq!(out.code, 0, "{}", out.summary);
    assert!(out.json["bound"].as_str().unwrap().ends_with("= 24"));
    assert_eq!(out.json["passed"], true);
}

#[test]
fn verify_rejects_the_wrong_parity() {
    let out = crosskit(&["verify", "thm1", "--m", "3", "--n", "4", "--source", "cylinder"]);
    assert_eq!(out.code, 2);
    assert_eq!(out.json["error"], "WRONG_PARITY");
    assert_eq!(crosskit(&["verify", "thm2"]).code, 2);
}

#[test]
fn verify_writes_one_report_per_drawing() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "certs.json");
    let out = crosskit(&["verify", "thm3", "--m", "2", "--n", "3", "--seeds", "3", "-o", &file]);
    assert_eq!(out.code, 0, "{}", out.summary);
    let reports: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 4);
    assert_eq!(reports[0]["drawing"], "cylinder");
}

#[test]
fn lemma_checks_pass() {
    for args in [
        &["verify", "lemma1", "--graph", "K=2,3,2", "--seeds", "2"][..],
        &["verify", "lemma2", "--m", "3", "--n", "4", "--seeds", "3"],
        &["verify", "lemma3", "--m", "3", "--n", "3", "--seeds", "3"],
    ] {
        let out = crosskit(args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.summary);
    }
}

#[test]
fn exact_finds_k33_and_its_witness_rechecks() {
    let dir = tempfile::tempdir().unwrap();
    let w = path(dir.path(), "w.json");
    let d = path(dir.path(), "w.crdraw.json");
    let out = crosskit(&["exact", "K=3,3", "--max-k", "2", "-o", &w, "--drawing", &d]);
    assert_eq!(out.code, 0);
    assert_eq!(out.json["value"], 1);
    assert_eq!(crosskit(&["exact", "K=3,3", "--check", &w]).code, 0);
    assert_eq!(crosskit(&["count", &d]).summary, "1");
    // the same witness does not fit another graph
    assert_eq!(crosskit(&["exact", "K=2,4", "--check", &w]).code, 1);
    std::fs::write(&w, "{\"k\": 1}").unwrap();
    assert_eq!(crosskit(&["exact", "K=3,3", "--check", &w]).code, 2);
}

#[test]
fn exact_out_of_budget_fails() {
    let out = crosskit(&["exact", "K=3,4", "--max-k", "1"]);
    assert_eq!(out.code, 1);
    assert_eq!(out.json["at_least"], 2);
}

#[test]
fn bounds_tables() {
    let csv = crosskit(&["bounds", "--m-range", "1..4", "--n-range", "1..4"]);
    assert_eq!(csv.code, 0);
    let text = csv.output.unwrap();
    let mut rows = text.lines();
    assert_eq!(rows.next().unwrap(), "m,n,lower,lower_source,assumptions,upper,status");
    assert_eq!(rows.count(), 16);
    let json = crosskit(&["bounds", "--m-range", "4", "--n-range", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json.output.unwrap()).unwrap();
    assert_eq!(v[0]["status"], "exact");
    assert_eq!(v[0]["best_lower"]["value"], 24);
    assert_eq!(crosskit(&["bounds", "--m-range", "4..2", "--n-range", "1"]).code, 2);
}

#[test]
fn transform_certifies_the_split() {
    let dir = tempfile::tempdir().unwrap();
    let src = path(dir.path(), "c.crdraw.json");
    let out_file = path(dir.path(), "t.crdraw.json");
    let cert = path(dir.path(), "t.cert.json");
    assert_eq!(crosskit(&["gen", "cylinder", "4", "4", "-o", &src]).code, 0);
    let out = crosskit(&[
        "transform",
        "lemma1-d2",
        &src,
        "--vertex",
        "o",
        "--part",
        "y1,y2,y3,y4",
        "--k",
        "1",
        "--x-label",
        "s",
        "--y-label",
        "t",
        "-o",
        &out_file,
        "--cert",
        &cert,
    ]);
    assert_eq!(out.code, 0, "{}", out.summary);
    assert_eq!(crosskit(&["validate", &out_file]).code, 0);
    let c: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["passed"], true);
    let odd = crosskit(&["transform", "lemma1-d1", &src, "--vertex", "o", "--part", "y1,y2,y3"]);
    assert_eq!((odd.code, odd.json["error"].as_str()), (2, Some("ODD_P")));
}

#[test]
fn counting_classes_and_the_ledger() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "c.crdraw.json");
    crosskit(&["gen", "cylinder", "2", "2", "-o", &file]);
    assert_eq!(crosskit(&["count", &file, "--class", "o:x", "--class", "y1,y2:z1,z2"]).summary, "1");
    assert_eq!(crosskit(&["count", &file, "--class", "o:nobody"]).code, 2);
    let l = crosskit(&["ledger", &file]);
    assert_eq!(l.code, 0);
    assert_eq!(l.json["holds"], true);
}

#[test]
fn seeds_come_from_the_flag_then_the_environment() {
    let from_flag = crosskit(&["--seed", "5", "gen", "random", "K=3,3"]).output;
    let from_env = run(["crosskit", "gen", "random", "K=3,3"], Some("5")).output;
    assert_eq!(from_flag, from_env);
    let flag_wins = run(["crosskit", "--seed", "5", "gen", "random", "K=3,3"], Some("6")).output;
    assert_eq!(from_flag, flag_wins);
    let default = crosskit(&["gen", "random", "K=3,3"]).output;
    let explicit = crosskit(&["--seed", &DEFAULT_SEED.to_string(), "gen", "random", "K=3,3"]).output;
    assert_eq!(default, explicit);
    assert_ne!(default, from_flag);
    assert_eq!(run(["crosskit", "gen", "random", "K=3,3"], Some("five")).code, 2);
}

fn binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_crosskit")).args(args).env_remove("CROSSKIT_SEED").output().unwrap()
}

#[test]
fn process_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = path(dir.path(), "g.crdraw.json");
    assert_eq!(binary(&["gen", "cylinder", "1", "2", "-o", &good]).status.code(), Some(0));
    assert_eq!(binary(&["validate", &good]).status.code(), Some(0));

    // swap two entries of a rotation: still well-formed, no longer plane
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    v["rotations"]["o"].as_array_mut().unwrap().swap(1, 2);
    let bad = path(dir.path(), "b.crdraw.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let out = binary(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("invalid"));

    let junk = path(dir.path(), "j.crdraw.json");
    std::fs::write(&junk, "{ not json").unwrap();
    assert_eq!(binary(&["validate", &junk]).status.code(), Some(2));
    assert_eq!(binary(&["validate", &path(dir.path(), "missing")]).status.code(), Some(2));
    assert_eq!(binary(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(binary(&["--help"]).status.code(), Some(0));

    let out = binary(&["--json", "count", &good]);
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["crossings"], 0);
}
