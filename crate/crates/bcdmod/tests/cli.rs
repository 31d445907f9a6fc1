use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcdmod")).args(args).env_remove("BCDMOD_OUT_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn labels_of_c12() {
    let v = json(&["labels", "--series", "C", "--n", "1", "--k", "2"]);
    assert_eq!(v["labels"], serde_json::json!(["∅", "(1)", "(2)"]));
    assert_eq!(v["spec"]["M"], 16);
    assert_eq!(v["spec"]["gamma"], serde_json::json!([[], [1], [2]]));
}

#[test]
fn verlinde_genus_two() {
    let o = run(&["verlinde", "--series", "C", "--n", "1", "--k", "2", "--genus", "2", "--method", "closed", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "series,n,k,g,d_g,method\nC,1,2,2,10,closed_form\n");
}

#[test]
fn verlinde_csv_rows() {
    let o = run(&["verlinde", "--series", "C", "--n", "1", "--k", "2", "--genus", "0..6", "--method", "generic", "--format", "csv"]);
    let lines: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(4).unwrap().to_string()).collect();
    assert_eq!(lines, ["1", "3", "10", "36", "136", "528", "2080"]);
}

#[test]
fn check_passes_on_c11() {
    let o = run(&["check", "--series", "C", "--n", "1", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("S·S̄"));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["labels", "--series", "E", "--n", "1", "--k", "1"]).status.code(), Some(1));
    assert_eq!(run(&["labels", "--series", "C", "--n", "0", "--k", "1"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["verlinde", "--series", "C", "--n", "1", "--k", "1", "--genus", "3..1"]).status.code(), Some(1));
    assert_eq!(run(&["modularize", "--series", "D", "--n", "2", "--k", "2", "--m-choice", "all=3"]).status.code(), Some(1));
    let o = run(&["smatrix", "--series", "D", "--n", "1", "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("S-matrix"));
    assert_eq!(run(&["modularize", "--series", "B-", "--n", "1", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn failed_identity_exits_with_three() {
    // the empty product in rank one gives 2 for the transparent row (2k), whose dimension is 1
    let o = run(&["check", "--series", "D", "--n", "1", "--k", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("specialized ⟨(4)⟩"));
}

#[test]
fn empty_witness_list_is_valid() {
    let v = json(&["verdict", "--series", "C", "--n", "2", "--k", "2"]);
    assert_eq!(v["verdict"], "modular");
    assert_eq!(v["witnesses"], serde_json::json!([]));
}

#[test]
fn smatrix_json_is_exact() {
    let v = json(&["smatrix", "--series", "C", "--n", "1", "--k", "1"]);
    assert_eq!(v["S"][1][1]["coeffs"][0], "-1");
    assert_eq!(v["S"][0][1]["approx"], serde_json::json!([-1.0, 0.0]));
}

#[test]
fn modularize_with_choices() {
    let v = json(&["modularize", "--series", "D", "--n", "2", "--k", "2", "--m-choice", "all=1", "--m-choice", "(2,2)=4"]);
    let kinds: Vec<&str> = v["labels"].as_array().unwrap().iter().map(|l| l["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds.iter().filter(|k| k.starts_with("quad")).count(), 4);
    assert_eq!(kinds.iter().filter(|k| **k == "hat").count(), 1);
    assert_eq!(v["determined"], true);
}

#[test]
fn symbolic_d() {
    let v = json(&["verlinde", "--series", "D", "--n", "1", "--k", "1", "--genus", "2", "--symbolic"]);
    assert_eq!(v["symbolic"][0]["A"]["coeffs"][0], "2");
    assert_eq!(v["symbolic"][0]["B"][0]["partition"], "(1)");
    assert_eq!(v["symbolic"][0]["B"][0]["coeff"]["coeffs"][0], "2");
}

#[test]
fn output_file_and_env_dir() {
    let dir = std::env::temp_dir().join(format!("bcdmod-cli-{}", std::process::id()));
    let file = dir.join("a").join("labels.json");
    let o = run(&["labels", "--series", "C", "--n", "1", "--k", "1", "--format", "json", "--output", file.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert!(std::fs::read_to_string(&file).unwrap().contains("\"labels\""));
    let o = Command::new(env!("CARGO_BIN_EXE_bcdmod"))
        .args(["dims", "--series", "CB-", "--n", "1", "--k", "1", "--format", "csv"])
        .env("BCDMOD_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(std::fs::read_to_string(dir.join("dims_CBneg_1_1.csv")).unwrap().starts_with("label,qdim,approx\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn refine_report() {
    let v = json(&["refine", "--series", "C", "--n", "2", "--k", "2"]);
    assert_eq!(v["verdict"], "cohomological");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn dual_map() {
    let v = json(&["dual", "--series", "C", "--n", "1", "--k", "2"]);
    assert_eq!(v["dual"]["n"], 2);
    assert!(v["map"].as_array().unwrap().iter().all(|m| m["equal"] == true));
}

#[test]
fn deterministic_output() {
    let args = ["fusion", "--series", "C", "--n", "2", "--k", "2", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
