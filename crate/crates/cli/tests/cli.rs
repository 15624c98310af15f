use std::io::Write;
use std::process::{Command, Output, Stdio};

use mindist_cli::ProblemFile;
use tempfile::NamedTempFile;

const BINOMIALS: &str = r#"{
  "field": 2,
  "variables": ["t1", "t2", "t3"],
  "order": "grevlex",
  "generators": ["t1*t2^2 - t1^2*t2", "t1*t3^2 - t1^2*t3", "t2^2*t3 - t2*t3^2"]
}"#;

const FIVE_PRIMES: &str = r#"{
  "field": 3,
  "variables": ["t1", "t2", "t3", "t4"],
  "primes": [
    ["t3 + t4", "t2 + t4", "t1 + t4"],
    ["t3 + t4", "t2", "t1 - t4"],
    ["t4", "t2", "t1"],
    ["t4", "t3", "t1"],
    ["t4", "t2 - t3", "t1"]
  ]
}"#;

const WHISKER: &str = r#"{
  "field": 2,
  "variables": ["x1", "x2", "y1", "y2"],
  "graph": {"vertices": 4, "edges": [[1, 3], [1, 4], [2, 4]]}
}"#;

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn mindist(args: &[&str], input: Option<&NamedTempFile>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mindist"));
    cmd.args(args);
    if let Some(f) = input {
        cmd.arg("--input").arg(f.path());
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_reproduces_the_binomial_example() {
    let f = file(BINOMIALS);
    let text = stdout(&mindist(&["table", "--max-d", "3"], Some(&f)));
    let rows: Vec<Vec<String>> = text
        .lines()
        .skip(2)
        .map(|l| l.split('|').map(|c| c.trim().to_string()).collect())
        .collect();
    assert_eq!(
        rows,
        vec![
            vec!["1", "3", "4", "4", "4"],
            vec!["2", "6", "2", "1", "2"],
            vec!["3", "7", "1", "1", "1"],
        ]
    );
    assert!(text.starts_with("degree 7, dimension 1\nd | H | delta | fp | vasconcelos\n"));
}

#[test]
fn footprint_of_the_five_point_ideal_vanishes() {
    let f = file(FIVE_PRIMES);
    assert_eq!(stdout(&mindist(&["fp", "-d", "1"], Some(&f))), "0\n");
    let initial = stdout(&mindist(&["initial"], Some(&f)));
    let mut gens: Vec<&str> = initial.lines().collect();
    gens.sort();
    assert_eq!(
        gens,
        ["t1*t2", "t1*t3", "t1*t4", "t1^2", "t2^2*t3", "t2^2*t4", "t3*t4"]
    );
}

#[test]
fn closed_formula_needs_no_input() {
    let out = stdout(&mindist(
        &["ci", "--degrees", "2,3", "-d", "2", "--json"],
        None,
    ));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["values"][0]["value"], 2);
    assert_eq!(v["result"]["degree"], 6);
    assert_eq!(v["result"]["regularity"], 3);
}

#[test]
fn json_keys_are_stable_and_carry_provenance() {
    let f = file(BINOMIALS);
    let out = stdout(&mindist(
        &[
            "delta",
            "-d",
            "2",
            "--json",
            "--budget",
            "100",
            "--no-prune",
        ],
        Some(&f),
    ));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["value"], 2);
    let p = &v["provenance"];
    assert_eq!(p["order"], "grevlex");
    assert_eq!(p["budget"], 100);
    assert_eq!(p["prune_regular_leading"], false);
    assert_eq!(p["field"], 2);
    let keys = [
        "\"command\"",
        "\"provenance\"",
        "\"version\"",
        "\"budget\"",
        "\"result\"",
    ];
    let positions: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
    // identical runs give identical bytes
    let again = stdout(&mindist(
        &[
            "delta",
            "-d",
            "2",
            "--json",
            "--budget",
            "100",
            "--no-prune",
        ],
        Some(&f),
    ));
    assert_eq!(out, again);
}

#[test]
fn order_flag_overrides_the_problem() {
    let f = file(BINOMIALS);
    let out = stdout(&mindist(&["initial", "--order", "lex", "--json"], Some(&f)));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["provenance"]["order"], "lex");
    let out = mindist(&["fp", "-d", "1", "--order", "lex"], Some(&f));
    assert_eq!(out.status.code(), Some(2), "lex is not graded");
}

#[test]
fn exit_codes_separate_input_and_budget_errors() {
    let f = file(BINOMIALS);
    let over = mindist(&["delta", "-d", "2", "--budget", "10"], Some(&f));
    assert_eq!(over.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&over.stderr).contains("63 candidates"));

    let bad = file(r#"{"field": 2, "variables": ["x", "x"], "generators": ["x"]}"#);
    let out = mindist(&["gb"], Some(&bad));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("variables[1]"));

    assert_eq!(mindist(&["gb"], None).status.code(), Some(2));
    assert_eq!(mindist(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mindist"))
        .args(["hilbert", "--max-d", "3", "--json", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(FIVE_PRIMES.as_bytes())
        .unwrap();
    let out = stdout(&child.wait_with_output().unwrap());
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["degree"], 5);
    assert_eq!(v["result"]["dimension"], 1);
    assert_eq!(v["result"]["regularity_index"], 2);
    assert_eq!(v["result"]["values"], serde_json::json!([1, 4, 5, 5]));
}

#[test]
fn graph_commands() {
    let f = file(WHISKER);
    let out = stdout(&mindist(&["witness", "--json"], Some(&f)));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["monomial"], "x1");
    assert_eq!(v["result"]["degree"], 1);
    assert_eq!(v["result"]["fp"], 1);
    let out = stdout(&mindist(&["edge-ideal"], Some(&f)));
    assert!(out.contains("edge ideal: (x1*y1, x1*y2, x2*y2)"), "{out}");
    assert!(out.contains("induced matching number: 1"));

    let c4 = file(
        r#"{"field": 2, "graph": {"vertices": 4, "edges": [[1, 2], [2, 3], [3, 4], [1, 4]]}}"#,
    );
    assert_eq!(
        stdout(&mindist(&["witness"], Some(&c4))),
        "no labeling exists\n"
    );
    let binomials = file(BINOMIALS);
    assert_eq!(
        mindist(&["witness"], Some(&binomials)).status.code(),
        Some(2)
    );
}

#[test]
fn asserted_unmixedness_is_reported() {
    let f = file(FIVE_PRIMES);
    let out = stdout(&mindist(
        &["delta", "-d", "1", "--assert-unmixed", "--json"],
        Some(&f),
    ));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["provenance"]["unmixedness"], "asserted");
    assert!(v["result"]["value"].as_i64().unwrap() >= 1);
}

#[test]
fn problem_files_round_trip() {
    for text in [BINOMIALS, FIVE_PRIMES, WHISKER] {
        let input = ProblemFile::parse(text).unwrap();
        let rendered = input.render();
        assert_eq!(ProblemFile::parse(&rendered).unwrap(), input);
        let f = file(&rendered);
        assert!(mindist(&["gb"], Some(&f)).status.success());
    }
}
