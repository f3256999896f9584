use std::io::Write;
use std::process::{Command, Output};

use dynkin_cli::render::parse_table_markdown;
use dynkin_core::table::TableColumn;
use serde_json::Value;

fn dynkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dynkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dynkin(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    dynkin(args).status.code().unwrap()
}

#[test]
fn index_examples() {
    let v = json(&["index", "--algebra", "sl4", "--partition", "4"]);
    assert_eq!(v["value"], "10");
    assert_eq!(v["routes"]["partition-formula"], "10");
    assert_eq!(v["routes"]["adjoint-branching"], "10");

    let v = json(&["index", "--algebra", "so8", "--partition", "7,1"]);
    assert_eq!(v["value"], "28");

    let v = json(&["index", "--algebra", "F4", "--partition", "17,9", "--via", "simplest"]);
    assert_eq!(v["value"], "156");
    assert_eq!(v["routes"]["simplest-representation"], "156");
}

#[test]
fn index_abstract_label_uses_vector_rep() {
    let v = json(&["index", "--algebra", "C3", "--partition", "6"]);
    assert_eq!(v["algebra"], "C3");
    assert_eq!(v["value"], "35");
    let v = json(&["index", "--algebra", "sp6", "--partition", "2,1,1,1,1", "--via", "adjoint"]);
    assert_eq!(v["value"], "1");
    assert_eq!(v["routes"].as_object().unwrap().len(), 1);
}

#[test]
fn index_usage_errors() {
    assert_eq!(code(&["index", "--algebra", "sp4", "--partition", "3,1"]), 2);
    assert_eq!(code(&["index", "--algebra", "sl4", "--partition", "1,1,1,1"]), 2);
    assert_eq!(code(&["index", "--algebra", "sl4", "--partition", "3"]), 2);
    assert_eq!(code(&["index", "--algebra", "sl4", "--partition", "a,b"]), 2);
    assert_eq!(code(&["index", "--algebra", "X9", "--partition", "4"]), 2);
    assert_eq!(code(&["index", "--algebra", "sl4", "--partition", "4", "--via", "simplest"]), 2);
    assert_eq!(code(&["index", "--algebra", "E6", "--partition", "27", "--via", "adjoint"]), 2);
    assert_eq!(code(&["index", "--algebra", "G2", "--partition", "6,1"]), 2);
    assert_eq!(code(&["index", "--algebra", "sl4"]), 2);
    assert_eq!(code(&["index", "--algebra", "sl4", "--partition", "4", "--format", "dot"]), 2);
}

#[test]
fn index_text_formats() {
    let md = stdout(&["index", "--algebra", "sl4", "--partition", "3,1", "--format", "md"]);
    assert_eq!(
        md,
        "| algebra | partition | route | value |\n|---|---|---|---|\n\
         | sl4 | 3,1 | adjoint-branching | 4 |\n| sl4 | 3,1 | partition-formula | 4 |\n"
    );
    let csv = stdout(&["index", "--algebra", "sl4", "--partition", "3,1", "--format", "csv"]);
    assert_eq!(
        csv,
        "algebra,partition,route,value\nsl4,\"3,1\",adjoint-branching,4\nsl4,\"3,1\",partition-formula,4\n"
    );
}

#[test]
fn rep_index_examples() {
    let v = json(&["rep-index", "--algebra", "A1", "--weight", "3"]);
    assert_eq!((v["dimension"].as_str(), v["index"].as_str()), (Some("4"), Some("10")));
    let v = json(&["rep-index", "--algebra", "E6", "--weight", "1,0,0,0,0,0"]);
    assert_eq!((v["dimension"].as_str(), v["index"].as_str()), (Some("27"), Some("6")));
    let v = json(&["rep-index", "--algebra", "A2", "--weight", "1,1"]);
    assert_eq!((v["dimension"].as_str(), v["index"].as_str()), (Some("8"), Some("6")));
    let v = json(&["rep-index", "--algebra", "sl3", "--weight", "1,1"]);
    assert_eq!(v["algebra"], "A2");
}

#[test]
fn rep_index_errors() {
    assert_eq!(code(&["rep-index", "--algebra", "A2", "--weight", "1"]), 2);
    assert_eq!(code(&["rep-index", "--algebra", "A2", "--weight", "1,-1"]), 2);
    assert_eq!(code(&["rep-index", "--algebra", "so4", "--weight", "1,1"]), 2);
}

#[test]
fn table_markdown_matches_json() {
    for rank in ["2", "5", "10"] {
        let md = stdout(&["table", "--sample-rank", rank]);
        let js = stdout(&["table", "--sample-rank", rank, "--format", "json"]);
        let from_json: Vec<TableColumn> = serde_json::from_str(&js).unwrap();
        assert_eq!(parse_table_markdown(&md).unwrap(), from_json);
    }
}

#[test]
fn table_columns() {
    let v = json(&["table", "--format", "json"]);
    let cols = v.as_array().unwrap();
    let labels: Vec<&str> = cols.iter().map(|c| c["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["A_n", "B_n", "C_n", "D_n", "E6", "E7", "E8", "F4", "G2"]);
    let e6 = &cols[4];
    assert_eq!(
        [&e6["principal_index"], &e6["d"], &e6["d_over_b_rank"]],
        ["156", "72", "3/2"]
    );
    assert_eq!((e6["a"].as_i64(), e6["b"].as_i64()), (Some(6), Some(8)));
    let d5 = &cols[3];
    assert_eq!(d5["lie_type"], "D5");
    assert_eq!([&d5["principal_index"], &d5["d"]], ["60", "30"]);
    let csv = stdout(&["table", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 10);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table"][..],
        &["table", "--format", "json"],
        &["poset", "--kind", "so", "--n", "8"],
        &["verify", "--only", "identities", "--max-identity-n", "6", "--format", "json"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn poset_examples() {
    let v = json(&["poset", "--kind", "sl", "--n", "4", "--format", "json"]);
    let idx: Vec<&str> = v["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n["index"].as_str().unwrap())
        .collect();
    assert_eq!(idx, ["10", "4", "2", "1", "0"]);
    assert_eq!(v["covers"], serde_json::json!([[0, 1], [1, 2], [2, 3], [3, 4]]));

    for (kind, n) in [("sp", "4"), ("so", "5")] {
        let v = json(&["poset", "--kind", kind, "--n", n, "--format", "json"]);
        assert_eq!(v["nodes"].as_array().unwrap().len(), 4);
    }

    let dot = stdout(&["poset", "--kind", "sl", "--n", "4"]);
    assert!(dot.starts_with("digraph \"sl_4\" {\n"));
    assert!(dot.contains("n0 [label=\"(4)\\nind 10\"];"));
    assert!(dot.contains("n3 -> n4;"));
    assert!(dot.ends_with("}\n"));
}

#[test]
fn poset_errors() {
    assert_eq!(code(&["poset", "--kind", "sp", "--n", "5"]), 2);
    assert_eq!(code(&["poset", "--kind", "su", "--n", "4"]), 2);
    assert_eq!(code(&["poset", "--kind", "sl", "--n", "4", "--format", "csv"]), 2);
}

#[test]
fn verify_default_passes() {
    let out = stdout(&["verify"]);
    let status_rows = out.lines().filter(|l| l.ends_with("| pass |")).count();
    assert!(status_rows >= 6, "{out}");
    assert!(out.contains("all 10 checks passed"));
}

#[test]
fn verify_subsets() {
    let v = json(&["verify", "--only", "identities", "--max-identity-n", "10", "--format", "json"]);
    let outcomes = v["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 1);
    assert_eq!(outcomes[0]["check"], "identities");
    assert_eq!(v["config"]["max_identity_n"], 10);

    let csv = stdout(&["verify", "--only", "bounds,table", "--max-classical-rank", "12", "--format", "csv"]);
    assert_eq!(
        csv.lines().collect::<Vec<_>>()[..2],
        ["check,cases,failures,passed", "table,92,0,true"]
    );
    assert!(csv.lines().nth(2).unwrap().starts_with("bounds,"));
}

#[test]
fn verify_config_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "max_partition_size = 6\nchecks = [\"routes\", \"monotonicity\"]").unwrap();
    let path = f.path().to_str().unwrap();
    let v = json(&["verify", "--config", path, "--format", "json"]);
    assert_eq!(v["config"]["max_partition_size"], 6);
    assert_eq!(v["config"]["max_classical_rank"], 10);
    assert_eq!(v["outcomes"].as_array().unwrap().len(), 2);

    // flags override the file
    let v = json(&["verify", "--config", path, "--max-partition-size", "5", "--format", "json"]);
    assert_eq!(v["config"]["max_partition_size"], 5);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "max_rank = 4").unwrap();
    assert_eq!(code(&["verify", "--config", bad.path().to_str().unwrap()]), 2);
}

#[test]
fn verify_usage_errors() {
    assert_eq!(code(&["verify", "--only", "nothing"]), 2);
    assert_eq!(code(&["verify", "--max-identity-n", "1"]), 2);
    assert_eq!(code(&["verify", "--config", "/nonexistent/dynkin.toml"]), 2);
}
