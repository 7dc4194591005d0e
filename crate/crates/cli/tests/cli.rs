use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_padovan")).args(args).env_remove("PADOVAN_INDEX_CAP").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json", "--deterministic"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "40", "--strategy", "trisect"]), "55405\n");
    assert_eq!(stdout(&["eval", "0"]), "1\n");
    assert_eq!(stdout(&["eval", "-10"]), "2\n");
    assert_eq!(stdout(&["eval", "40", "--strategy", "decimated:8", "--check"]), "55405\n");
    assert_eq!(json(&["eval", "40"])["result"]["value"], "55405");
}

#[test]
fn coeffs_examples() {
    let csv = stdout(&["coeffs", "1..8", "--format", "csv"]);
    assert_eq!(csv, "a,rho,sigma\n1,0,1\n2,2,-1\n3,3,-2\n4,2,3\n5,5,-4\n6,5,2\n7,7,1\n8,10,-5\n");
    let rows = &json(&["coeffs", "0..0"])["result"]["rows"];
    assert_eq!(rows[0], serde_json::json!({"a": 0, "rho": "3", "sigma": "-3"}));
    let rows = &json(&["coeffs", "10..10"])["result"]["rows"];
    assert_eq!(rows[0], serde_json::json!({"a": 10, "rho": "17", "sigma": "-6"}));
    let signed = stdout(&["coeffs", "-8..0", "--format", "csv"]);
    let rho: Vec<&str> = signed.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(rho, ["5", "-1", "-2", "4", "-3", "2", "1", "-1", "3"]);
}

#[test]
fn reduce_examples() {
    let r = &json(&["reduce", "38", "7"])["result"];
    assert_eq!(r["coeffs"], serde_json::json!({"c2": "358", "c1": "57", "c0": "50"}));
    assert_eq!(r["head_indices"], serde_json::json!([17, 10, 3]));
    assert_eq!(r["value"], "31572");
    let unit = &json(&["reduce", "17", "7"])["result"];
    assert_eq!(unit["coeffs"], serde_json::json!({"c2": "1", "c1": "0", "c0": "0"}));
    let big = &json(&["reduce", "4000", "37"])["result"];
    assert_eq!(big["verified"], true);
    assert_eq!(big["value"].as_str().unwrap(), stdout(&["eval", "4000"]).trim());
}

#[test]
fn table_sums_qr_examples() {
    let t = &json(&["table", "5", "4"])["result"]["entries"];
    assert_eq!(t[0], serde_json::json!(["1", "1", "2", "2", "3"]));
    assert_eq!(t[3][0], "65");
    assert_eq!(stdout(&["sums", "4", "1", "4"]), "127\n");
    let qr = &json(&["qr", "6..6"])["result"]["rows"][0];
    assert_eq!((&qr["q"], &qr["r"]), (&Value::from("3"), &Value::from("5")));
}

#[test]
fn json_output_round_trips() {
    for args in
        [&["eval", "300"][..], &["coeffs", "-3..3"], &["reduce", "38", "7"], &["table", "3", "3"], &["qr", "0..4"]]
    {
        let mut full = args.to_vec();
        full.extend(["--format", "json", "--deterministic"]);
        let text = stdout(&full);
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
    }
}

#[test]
fn deterministic_mode_is_byte_identical() {
    let args = ["reduce", "500", "9", "--format", "json", "--deterministic"];
    assert_eq!(stdout(&args), stdout(&args));
    assert!(json(&["eval", "1"]).get("timestamp").is_none());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["eval", "12x"][..],
        &["eval", "5", "--strategy", "fast"],
        &["coeffs", "3..1"],
        &["reduce", "38", "0"],
        &["table", "0", "4"],
        &["sums", "3", "4", "2"],
        &["qr", "-3..2"],
        &["eval", "100", "--cap", "50"],
        &["bench", "--reps", "2", "--ladder", "10"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_padovan"))
        .args(["eval", "60"])
        .env("PADOVAN_INDEX_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_padovan"))
        .args(["eval", "60"])
        .env("PADOVAN_INDEX_CAP", "nope")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn small_bench_csv() {
    let csv = stdout(&["bench", "--ladder", "0,40", "--reps", "3", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows[..4].iter().all(|r| &r[6] == "1"));
    assert!(rows[4..].iter().all(|r| &r[6] == "55405" && &r[5] == "5"));
}
