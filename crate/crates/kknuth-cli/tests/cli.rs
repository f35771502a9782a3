//! End-to-end tests running the compiled binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kknuth"))
        .args(args)
        .env_remove("KKNUTH_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn run_cached(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kknuth"))
        .args(args)
        .env("KKNUTH_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn write_tableau(dir: &Path, name: &str, json: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, json).expect("write tableau file");
    path.to_str().expect("UTF-8 path").to_owned()
}

#[test]
fn insert_prints_the_insertion_tableau() {
    let output = run(&["insert", "--word", "13422"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "[[1,2,4],[3,4]]\n");
}

#[test]
fn insert_trace_lists_active_positions() {
    let output = run(&["insert", "--word", "13422", "--trace"]);
    assert_eq!(stdout(&output), "[[1,2,4],[3,4]]\nactive 1 2 3 4 5\n");

    let output = run(&["insert", "--word", "13422", "--trace", "--json"]);
    assert_eq!(
        stdout(&output),
        "{\"active\":[1,2,3,4,5],\"changed\":true,\"tableau\":{\"rows\":[[1,2,4],[3,4]]}}\n"
    );
}

#[test]
fn insert_accepts_comma_separated_letters() {
    let comma = run(&["insert", "--word", "1,3,4,2,2"]);
    assert_eq!(exit_code(&comma), 0);
    let digits = run(&["insert", "--word", "13422"]);
    assert_eq!(comma.stdout, digits.stdout);

    let wide = run(&["insert", "--word", "13,4,2,12"]);
    assert_eq!(exit_code(&wide), 0);
    assert_eq!(stdout(&wide), "[[2,12],[4],[13]]\n");
}

#[test]
fn equiv_decides_bounded_and_unbounded() {
    let output = run(&["equiv", "121", "212", "--bounded", "3"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "true\n");

    let output = run(&["equiv", "1342", "13422"]);
    assert_eq!(stdout(&output), "true\n");

    let output = run(&["equiv", "12", "21", "--bounded", "6"]);
    assert_eq!(stdout(&output), "false\n");

    let output = run(&["equiv", "121", "212", "--bounded", "3", "--json"]);
    assert_eq!(
        stdout(&output),
        "{\"bound\":3,\"equivalent\":true,\"method\":\"bounded\"}\n"
    );
}

#[test]
fn equiv_rejects_malformed_words() {
    let output = run(&["equiv", "1x2", "12"]);
    assert_eq!(exit_code(&output), 1);
    assert!(stdout(&output).is_empty());
    assert!(stderr(&output).contains("1x2"));
}

#[test]
fn equiv_rejects_overlong_bounded_input() {
    let output = run(&["equiv", "1212", "2121", "--bounded", "3"]);
    assert_eq!(exit_code(&output), 1);
}

#[test]
fn perm_prints_one_line_images() {
    let output = run(&["perm", "21231"]);
    assert_eq!(stdout(&output), "[3,2,4,1]\n");

    let output = run(&["perm", "21231", "--json"]);
    assert_eq!(stdout(&output), "{\"images\":[3,2,4,1]}\n");
}

#[test]
fn rectify_slides_to_a_straight_tableau() {
    let dir = tempfile::tempdir().expect("tempdir");
    let skew = write_tableau(
        dir.path(),
        "skew.json",
        "{\"skew\":{\"outer\":[4,3,3],\"inner\":[3,2],\"rows\":[[2],[2],[1,3,4]]}}",
    );
    let output = run(&["rectify", "--skew", &skew]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "[[1,2,4],[3]]\n");

    let output = run(&["rectify", "--skew", &skew, "--all"]);
    assert_eq!(stdout(&output), "[[1,2,4],[3]]\n[[1,2,4],[3,4]]\n");

    let output = run(&["rectify", "--skew", &skew, "--all", "--json"]);
    assert_eq!(
        stdout(&output),
        "[{\"rows\":[[1,2,4],[3]]},{\"rows\":[[1,2,4],[3,4]]}]\n"
    );
}

#[test]
fn rectify_rejects_malformed_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let bad = write_tableau(dir.path(), "bad.json", "{\"rows\":[[2,1]]}");
    let output = run(&["rectify", "--skew", &bad]);
    assert_eq!(exit_code(&output), 1);
    assert!(stderr(&output).contains("parsing tableau"));
}

#[test]
fn census_prints_the_table_row() {
    let output = run(&["census", "--n", "4"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "87 79 71\n");

    let output = run(&["census", "--n", "4", "--json"]);
    assert_eq!(
        stdout(&output),
        "{\"initial_classes\":79,\"initial_tableaux\":87,\"n\":4,\"urts\":71}\n"
    );
}

#[test]
fn classes_reports_and_saves_snapshots() {
    let dir = tempfile::tempdir().expect("tempdir");
    let snapshot = dir.path().join("classes3.json");
    let output = run(&[
        "classes",
        "--n",
        "3",
        "--save",
        snapshot.to_str().expect("UTF-8 path"),
    ]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "n 3\nuniverse 26\nclasses 26\ninitial 13 13 13\n");
    let saved: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&snapshot).expect("snapshot exists"))
            .expect("snapshot is JSON");
    assert_eq!(saved["format"], "kknuth-partition");
    assert_eq!(saved["n"], 3);
}

#[test]
fn classes_json_is_deterministic() {
    let first = run(&["classes", "--n", "3", "--json"]);
    let second = run(&["classes", "--n", "3", "--json"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        stdout(&first),
        "{\"classes\":26,\"initial_classes\":13,\"initial_tableaux\":13,\"n\":3,\"universe\":26,\"urts\":13}\n"
    );
}

#[test]
fn class_of_lists_members_in_order() {
    let dir = tempfile::tempdir().expect("tempdir");
    let singleton = write_tableau(dir.path(), "singleton.json", "{\"rows\":[[1,2],[2]]}");
    let output = run(&["class-of", "--tableau", &singleton]);
    assert_eq!(stdout(&output), "[[1,2],[2]]\n");

    let pair = write_tableau(dir.path(), "pair.json", "{\"rows\":[[1,2,4],[3]]}");
    let output = run(&["class-of", "--tableau", &pair]);
    assert_eq!(stdout(&output), "[[1,2,4],[3]]\n[[1,2,4],[3,4]]\n");
}

#[test]
fn urt_exit_codes_follow_the_verdict() {
    let dir = tempfile::tempdir().expect("tempdir");
    let minimal = write_tableau(dir.path(), "minimal.json", "{\"rows\":[[1,2],[2,3]]}");
    let output = run(&["urt", "--tableau", &minimal]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "yes\n");

    let undecided = write_tableau(dir.path(), "undecided.json", "{\"rows\":[[1,2,4],[3,4]]}");
    let output = run(&["urt", "--tableau", &undecided, "--method", "structural"]);
    assert_eq!(exit_code(&output), 2);
    assert_eq!(stdout(&output), "unknown\n");

    let output = run(&["urt", "--tableau", &undecided, "--method", "auto", "--json"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "{\"method\":\"exhaustive\",\"verdict\":\"no\"}\n");

    let output = run(&["urt", "--tableau", &undecided, "--method", "exhaustive"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "no\n");
}

#[test]
fn urt_rejects_skew_input() {
    let dir = tempfile::tempdir().expect("tempdir");
    let skew = write_tableau(
        dir.path(),
        "skew.json",
        "{\"skew\":{\"outer\":[2,1],\"inner\":[1],\"rows\":[[1],[1]]}}",
    );
    let output = run(&["urt", "--tableau", &skew, "--method", "structural"]);
    assert_eq!(exit_code(&output), 1);
}

#[test]
fn verify_reports_conjectures() {
    let output = run(&["verify", "interval", "--n", "3"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "holds\n");

    let output = run(&["verify", "length", "--n", "3"]);
    assert_eq!(stdout(&output), "holds\n");

    let output = run(&["verify", "interval", "--n", "3", "--json"]);
    assert_eq!(
        stdout(&output),
        "{\"conjecture\":\"interval\",\"counterexample\":null,\"holds\":true,\"n\":3}\n"
    );
}

#[test]
fn table_prints_census_rows() {
    let output = run(&["table", "--max-n", "2"]);
    assert_eq!(
        stdout(&output),
        "n initial-tableaux initial-classes urts\n0 1 1 1\n1 1 1 1\n2 3 3 3\n"
    );
}

#[test]
fn cache_directory_is_created_and_reused() {
    let dir = tempfile::tempdir().expect("tempdir");
    let cache = dir.path().join("cache");
    let first = run_cached(&["census", "--n", "3"], &cache);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(stdout(&first), "13 13 13\n");
    assert!(cache.join("partition-3.json").is_file());

    let second = run_cached(&["census", "--n", "3"], &cache);
    assert_eq!(first.stdout, second.stdout);

    fs::write(cache.join("partition-3.json"), "not json").expect("corrupt snapshot");
    let third = run_cached(&["census", "--n", "3"], &cache);
    assert_eq!(exit_code(&third), 0);
    assert_eq!(stdout(&third), "13 13 13\n");
    assert!(stderr(&third).contains("ignoring snapshot"));
    // The recomputed partition replaces the corrupt file.
    let rewritten = fs::read_to_string(cache.join("partition-3.json")).expect("snapshot");
    assert!(rewritten.starts_with("{\"format\":\"kknuth-partition\""));
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let output = run(&["bogus"]);
    assert_eq!(exit_code(&output), 1);

    let output = run(&["--help"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("kknuth"));

    let output = run(&["census"]);
    assert_eq!(exit_code(&output), 1, "missing --n is invalid input");
}

#[test]
fn extra_threads_only_add_a_note() {
    let output = run(&["census", "--n", "3", "--threads", "2"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "13 13 13\n");
    assert!(stderr(&output).contains("single-threaded"));

    let output = run(&["census", "--n", "3", "--threads", "0"]);
    assert_eq!(exit_code(&output), 1);
}
