//! End-to-end tests for the `graphseq` binary: exit codes, frozen text and
//! JSON output, canonical JSON round-trips, and sweep report files.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graphseq"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary must run")
}

fn stdout_line(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap().trim_end().to_string()
}

fn assert_canonical_json(line: &str) {
    let value: serde_json::Value = serde_json::from_str(line).expect("stdout must be JSON");
    assert_eq!(value.to_string(), line, "JSON must re-serialize byte-identically");
}

#[test]
fn check_exit_codes_track_verdict() {
    assert_eq!(run(&["check", "2,1,1"]).status.code(), Some(0));
    assert_eq!(run(&["check", "3,3,1,1"]).status.code(), Some(1));
    assert_eq!(run(&["check", "2,1,1", "--json"]).status.code(), Some(0));
    assert_eq!(run(&["check", "3,3,1,1", "--json"]).status.code(), Some(1));
}

#[test]
fn malformed_input_exits_two() {
    let bad_token = run(&["check", "3,x,1"]);
    assert_eq!(bad_token.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_token.stderr).contains("cannot parse"));

    let zero_entry = run(&["check", "0,1", "--json"]);
    assert_eq!(zero_entry.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&zero_entry.stderr).contains("nonpositive entry"));

    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["bound", "4", "2"]).status.code(), Some(2));
}

#[test]
fn check_json_golden() {
    let output = run(&["check", "3,3,1,1", "--json"]);
    let line = stdout_line(&output);
    assert_eq!(
        line,
        r#"{"prefix_sum":{"graphic":false,"k":2,"reason":"eg_fail"},"sequence":[3,3,1,1],"strong_index":{"graphic":false,"k":2,"reason":"rk_fail"}}"#
    );
    assert_canonical_json(&line);
}

#[test]
fn check_text_reports_both_tests() {
    let output = run(&["check", "3,3,1,1"]);
    let text = String::from_utf8(output.stdout).unwrap();
    assert_eq!(
        text,
        "sequence: 3,3,1,1\n\
         prefix-sum test: nongraphic: inequality fails at k=2\n\
         strong-index test: nongraphic: inequality fails at k=2\n"
    );
}

#[test]
fn run_length_notation_round_trips() {
    let output = run(&["check", "5^3,2,1^3"]);
    assert_eq!(output.status.code(), Some(1));
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.starts_with("sequence: 5^3,2,1^3\n"));
}

#[test]
fn realize_prints_edge_list() {
    let output = run(&["realize", "3,2,2,1"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(String::from_utf8(output.stdout).unwrap(), "1 2\n1 3\n1 4\n2 3\n");
}

#[test]
fn realize_json_goldens() {
    let graphic = run(&["realize", "3,2,2,1", "--json"]);
    assert_eq!(graphic.status.code(), Some(0));
    let line = stdout_line(&graphic);
    assert_eq!(line, r#"{"edges":[[1,2],[1,3],[1,4],[2,3]],"n":4}"#);
    assert_canonical_json(&line);

    let blocked = run(&["realize", "3,3,1,1", "--json"]);
    assert_eq!(blocked.status.code(), Some(1));
    let line = stdout_line(&blocked);
    assert_eq!(line, r#"{"realizable":false,"sequence":[3,3,1,1]}"#);
    assert_canonical_json(&line);
}

#[test]
fn bound_json_golden() {
    let output = run(&["bound", "4", "2", "6", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    let line = stdout_line(&output);
    assert_eq!(
        line,
        r#"{"case":"III","classical":false,"nb":12,"sharp":true,"threshold":12,"triple":{"a":4,"b":2,"n":6}}"#
    );
    assert_canonical_json(&line);

    let failing = run(&["bound", "5", "2", "6", "--json"]);
    assert_eq!(failing.status.code(), Some(1));
    assert_eq!(
        stdout_line(&failing),
        r#"{"case":"I","classical":false,"nb":12,"sharp":false,"threshold":16,"triple":{"a":5,"b":2,"n":6}}"#
    );
}

#[test]
fn bound_text_golden() {
    let output = run(&["bound", "4", "2", "6"]);
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        "triple: (a=4, b=2, n=6)\n\
         classical bound (4nb >= (a+b+1)^2): fails\n\
         sharp bound (nb >= 12): holds\n\
         case: III\n"
    );
}

#[test]
fn two_element_verdict_and_exit_codes() {
    let graphic = run(&["two-element", "3", "2", "6", "2", "--json"]);
    assert_eq!(graphic.status.code(), Some(0));
    let line = stdout_line(&graphic);
    assert_eq!(
        line,
        r#"{"a":3,"b":2,"discriminant":4,"n":6,"s":2,"verdict":{"graphic":true,"reason":"even_sum_ok"}}"#
    );
    assert_canonical_json(&line);

    let odd = run(&["two-element", "5", "2", "8", "3", "--json"]);
    assert_eq!(odd.status.code(), Some(1));
    assert_eq!(
        stdout_line(&odd),
        r#"{"a":5,"b":2,"discriminant":1,"n":8,"s":3,"verdict":{"graphic":false,"reason":"odd_sum"}}"#
    );
}

#[test]
fn two_element_domain_error_exits_two() {
    let output = run(&["two-element", "2", "5", "8", "3", "--json"]);
    assert_eq!(output.status.code(), Some(2));
    assert_eq!(stdout_line(&output), r#"{"graphic":false,"reason":"out_of_domain"}"#);
    assert!(String::from_utf8_lossy(&output.stderr).contains("out of domain"));

    assert_eq!(run(&["two-element", "2", "5", "8", "3"]).status.code(), Some(2));
}

#[test]
fn witness_json_golden() {
    let output = run(&["witness", "5", "1", "7", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    let line = stdout_line(&output);
    assert_eq!(
        line,
        r#"{"case":"IV","certificate":3,"s":3,"sequence":[5,5,5,2,1,1,1],"triple":{"a":5,"b":1,"n":7}}"#
    );
    assert_canonical_json(&line);
}

#[test]
fn witness_text_golden() {
    let output = run(&["witness", "5", "1", "7"]);
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        "sequence: 5^3,2,1^3\ncase: IV\ns: 3\nfails at k=3\n"
    );
}

#[test]
fn witness_when_bound_holds_exits_one() {
    let output = run(&["witness", "4", "2", "6", "--json"]);
    assert_eq!(output.status.code(), Some(1));
    let line = stdout_line(&output);
    assert_eq!(line, r#"{"error":"bound_satisfied","triple":{"a":4,"b":2,"n":6}}"#);
    assert_canonical_json(&line);

    let text = run(&["witness", "4", "2", "6"]);
    assert_eq!(text.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&text.stdout).contains("sharp bound holds"));
}

#[test]
fn sweep_cases_json_report() {
    let output = run(&["sweep", "--mode", "cases", "--max-n", "8", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    let line = stdout_line(&output);
    assert_canonical_json(&line);
    let value: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(value["mode"], "cases");
    assert_eq!(value["examined"], 512);
    assert_eq!(value["counts"]["case_I"], 128);
    assert_eq!(value["counts"]["case_II"], 128);
    assert_eq!(value["counts"]["case_III"], 192);
    assert_eq!(value["counts"]["case_IV"], 64);
    assert_eq!(value["counterexamples"].as_array().unwrap().len(), 0);
    assert!(value.get("max_entry").is_none());
}

#[test]
fn sweep_oracle_text_summary() {
    let output = run(&["sweep", "--mode", "oracle", "--max-n", "4", "--max-entry", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("mode: oracle\n"));
    assert!(text.contains("examined: 34\n"));
    assert!(text.contains("counterexamples: 0\n"));
    let progress = String::from_utf8_lossy(&output.stderr);
    assert!(progress.contains("shards"));
}

#[test]
fn sweep_writes_jsonl_report_file() {
    let mut path = std::env::temp_dir();
    path.push(format!("graphseq-sweep-{}.jsonl", std::process::id()));
    let path_text = path.to_str().unwrap().to_string();
    let output = run(&["sweep", "--mode", "sharpness", "--max-n", "12", "--out", &path_text]);
    assert_eq!(output.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines.len(), 1, "clean run holds only the summary record");
    let summary: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(summary["record"], "summary");
    assert_eq!(summary["mode"], "sharpness");
    assert_eq!(summary["examined"], 220);
    assert_eq!(summary["counterexample_count"], 0);
}

#[test]
fn sweep_jobs_override() {
    let bad = bin()
        .args(["sweep", "--mode", "cases", "--max-n", "5"])
        .env("GRAPHSEQ_JOBS", "x")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("GRAPHSEQ_JOBS"));

    let from_env = bin()
        .args(["sweep", "--mode", "cases", "--max-n", "5", "--json"])
        .env("GRAPHSEQ_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(from_env.status.code(), Some(0));

    let flag_wins = bin()
        .args(["sweep", "--mode", "cases", "--max-n", "5", "--jobs", "1", "--json"])
        .env("GRAPHSEQ_JOBS", "x")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0), "explicit --jobs must bypass the env value");
}

#[test]
fn json_flag_position_is_flexible() {
    let leading = run(&["--json", "check", "2,1,1"]);
    let trailing = run(&["check", "2,1,1", "--json"]);
    assert_eq!(leading.status.code(), Some(0));
    assert_eq!(leading.stdout, trailing.stdout);
}
