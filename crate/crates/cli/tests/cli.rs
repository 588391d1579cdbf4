use std::process::{Command, Output};

use corekit::{CoefficientSeries, SequenceTable};
use serde_json::Value;

fn corekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corekit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = corekit(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn json_of(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn series_json_shape() {
    let text = stdout(&["series", "--t", "3", "--limit", "9", "--format", "json"]);
    assert_eq!(
        text,
        "{\"t\":3,\"limit\":9,\"coeffs\":[1,1,1,0,1,0,1,0,0,1]}\n"
    );
    let series: CoefficientSeries = serde_json::from_str(&text).unwrap();
    assert_eq!(
        format!("{}\n", serde_json::to_string(&series).unwrap()),
        text
    );
}

#[test]
fn series_methods_agree() {
    for t in ["2", "3", "4"] {
        let eq2 = stdout(&["series", "--t", t, "--limit", "30"]);
        let closed = stdout(&["series", "--t", t, "--limit", "30", "--method", "closed"]);
        let oracle = stdout(&["series", "--t", t, "--limit", "30", "--method", "oracle"]);
        assert_eq!(eq2, closed, "t = {t}");
        assert_eq!(eq2, oracle, "t = {t}");
    }
}

#[test]
fn series_text_is_one_coefficient_per_line() {
    let text = stdout(&["series", "--t", "2", "--limit", "6"]);
    assert_eq!(text, "1\n1\n0\n1\n0\n0\n1\n");
}

#[test]
fn enumerate_json() {
    let v = json(&[
        "enumerate",
        "--t1",
        "3",
        "--t2",
        "4",
        "--distinct",
        "--format",
        "json",
    ]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["distinct"], true);
    let parts: Vec<Value> = v["partitions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["parts"].clone())
        .collect();
    assert_eq!(parts, vec![json_of("[]"), json_of("[1]"), json_of("[2]")]);

    let all = json(&["enumerate", "--t1", "4", "--t2", "5", "--format", "json"]);
    assert_eq!(all["count"], 14);
    let sizes: Vec<u64> = all["partitions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["size"].as_u64().unwrap())
        .collect();
    assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(sizes.last(), Some(&15));
}

#[test]
fn stats_json() {
    let v = json(&["stats", "--t", "5", "--format", "json", "--precision", "3"]);
    assert_eq!(v["count"], 8);
    assert_eq!(v["largest_size"], 5);
    assert_eq!(v["maximizer_count"], 1);
    assert_eq!(v["maximizers"][0]["parts"], json_of("[3,2]"));
    assert_eq!(v["total_size"], 22);
    assert_eq!(v["average"], "11/4");
    assert_eq!(v["average_decimal"], "2.750");

    let v = json(&["stats", "--t", "7", "--format", "json"]);
    assert_eq!(v["maximizer_count"], 2);
    assert!(v.get("average_decimal").is_none());
}

#[test]
fn table_csv_and_json() {
    let csv = stdout(&["table", "--t-max", "3"]);
    assert_eq!(
        csv,
        "t,a,b,c,d,e,phi,psi,F\n2,2,1,1,1,1,1,0,1\n3,3,2,2,3,3,2,1,2\n"
    );

    let text = stdout(&["table", "--t-max", "90", "--format", "json"]);
    let table: SequenceTable = serde_json::from_str(&text).unwrap();
    assert_eq!(table.rows.len(), 89);
    assert_eq!(
        format!("{}\n", serde_json::to_string(&table).unwrap()),
        text
    );
}

#[test]
fn verify_small_suite_passes() {
    let v = json(&[
        "verify", "--suite", "tt1", "--t-max", "8", "--n-max", "12", "--format", "json", "--jobs",
        "2",
    ]);
    assert_eq!(v["passed"], true);
    let reports = v["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--t1", "5", "--t2", "7", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["stats", "--t", "9"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn invalid_input_exits_2() {
    let cases: &[&[&str]] = &[
        &["series", "--t", "5", "--limit", "9", "--method", "closed"],
        &["series", "--t", "1", "--limit", "9"],
        &["enumerate", "--t1", "4", "--t2", "6"],
        &["stats", "--t", "1"],
        &["table", "--t-max", "91"],
        &["verify", "--suite", "all", "--t-max", "10000"],
        &["verify", "--suite", "nope"],
        &["series", "--t", "3"],
    ];
    for args in cases {
        let out = corekit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
