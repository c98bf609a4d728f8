use std::collections::BTreeSet;

use hatgame::cli::{run, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn hatgame(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hatgame").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = hatgame(args);
    assert!(err.is_empty() || code != EXIT_OK, "{err}");
    (code, serde_json::from_str(&out).unwrap_or(Value::Null))
}

#[test]
fn sweep_composite_n12() {
    let (code, v) = json(&["sweep", "--strategy", "composite", "--n", "12", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let loss = v["report"]["worst_loss"].as_i64().unwrap();
    assert!(loss <= v["bound"]["structural_loss"].as_i64().unwrap());
    assert_eq!(v["bound"]["structural_loss"], 4);
    assert_eq!(v["report"]["evaluated"], 4096);
    assert_eq!(v["report"]["total_correct"], "24576");
    assert_eq!(v["passed"], true);
}

#[test]
fn eval_majority_balanced() {
    let (code, v) = json(&["eval", "--strategy", "majority", "--omega", "RRBB"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["record"]["correct_count"], 0);
    assert_eq!(v["record"]["guesses"], "BBRR");
    assert_eq!(v["record"]["correct_set"], serde_json::json!([]));
}

#[test]
fn identity_n6() {
    let (code, v) = json(&["identity", "--n", "6"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!((v["lhs"].as_str(), v["rhs"].as_str()), (Some("192"), Some("192")));
    assert_eq!(v["equal"], true);
}

#[test]
fn plan_json_schema() {
    let (code, out, _) = hatgame(&["plan", "--n", "64"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let keys: BTreeSet<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, BTreeSet::from(["n", "k", "l", "block_sizes", "blocks"]));
    assert_eq!(v["block_sizes"], serde_json::json!([22, 22, 20]));
    assert_eq!(v["blocks"][2].as_array().unwrap().len(), 20);
}

#[test]
fn search_optimal_and_bounds() {
    let (code, v) = json(&["search-optimal", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["best_min_correct"], 1);
    assert_eq!(v["strategies_enumerated"], 4096);

    let (code, v) = json(&["bounds", "--n", "4096", "--n-min", "6"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4091);
    assert_eq!(v["passed"], true);
}

#[test]
fn sample_is_byte_identical_for_equal_seeds() {
    let args = ["sample", "--strategy", "composite", "--n", "101", "--trials", "3000", "--seed", "9", "--red-count", "80"];
    let (c1, a, _) = hatgame(&args);
    let mut with_workers = args.to_vec();
    with_workers.extend(["--workers", "3"]);
    let (c2, b, _) = hatgame(&with_workers);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(a, b);
}

#[test]
fn text_mode_keys_appear_in_json() {
    let args = ["sweep", "--strategy", "pairing", "--n", "8"];
    let (_, v) = json(&args);
    let mut text_args = args.to_vec();
    text_args.extend(["--format", "text"]);
    let (code, text, _) = hatgame(&text_args);
    assert_eq!(code, EXIT_OK);
    for line in text.lines() {
        let (key, value) = line.split_once(" = ").unwrap();
        let mut node = &v;
        for part in key.split('.') {
            node = match node {
                Value::Array(items) => &items[part.parse::<usize>().unwrap()],
                other => &other[part],
            };
        }
        assert!(!node.is_null() || value.is_empty(), "{key} missing from JSON");
    }
    assert!(text.contains("report.worst_loss = 4"));
}

#[test]
fn csv_has_one_row_per_bucket() {
    let (code, out, _) = hatgame(&["sweep", "--strategy", "majority", "--n", "6", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("strategy,n,mode,correct_count,distributions"));
    // majority at n = 6 scores 0 (balanced), 4, 5 or 6
    let buckets: Vec<&str> = lines.map(|l| l.split(',').nth(3).unwrap()).collect();
    assert_eq!(buckets, vec!["0", "4", "5", "6"]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["eval", "--strategy", "pairing", "--omega", "RXB"][..],
        &["eval", "--strategy", "pairing", "--omega", "RRB"],
        &["eval", "--strategy", "majority", "--omega", "RRBB", "--n", "5"],
        &["identity", "--n", "7"],
        &["plan", "--n", "9"],
        &["sweep", "--strategy", "pairing", "--n", "30"],
        &["search-optimal", "--n", "4"],
        &["sample", "--strategy", "composite", "--n", "10", "--red-count", "11"],
        &["sample", "--strategy", "composite", "--n", "10", "--red-count", "lots"],
        &["sweep", "--strategy", "partial", "--n", "8", "--a", "3", "--b", "4"],
        &["sweep", "--strategy", "partial", "--n", "8", "--a", "0", "--b", "3", "--block", "3"],
        &["frobnicate"],
    ] {
        let (code, _, err) = hatgame(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn partial_sweep_checks_only_the_average() {
    let (code, v) = json(&["sweep", "--strategy", "partial", "--n", "8", "--a", "1", "--b", "4", "--block", "1"]);
    assert_eq!(code, EXIT_OK);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, vec!["average_is_half", "lower_bound_respected"]);
}
