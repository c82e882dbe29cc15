use std::process::{Command, Output};

use serde_json::Value;

fn qgrass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgrass"))
        .args(args)
        .env_remove("QG_FORMAT")
        .env_remove("QG_MAX_RANK")
        .env_remove("QG_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = qgrass(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn poincare_examples() {
    let v = json(&["poincare", "-t", "R", "-n", "3", "-e", "1,2"]);
    assert_eq!(v["result"]["coefficients"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["result"]["euler_characteristic"], 4);
    assert_eq!(v["command"], "poincare");
    let v = json(&["poincare", "-t", "R", "-n", "5", "-e", "0,2"]);
    assert_eq!(v["result"]["coefficients"], serde_json::json!([1, 1, 2, 2, 2, 1, 1]));
    let v = json(&["poincare", "-t", "P", "-n", "1", "-e", "1,2"]);
    assert_eq!(v["result"]["coefficients"], serde_json::json!([1]));
}

#[test]
fn empty_variety_is_not_an_error() {
    let v = json(&["poincare", "-t", "R", "-n", "3", "-e", "2,1"]);
    assert_eq!(v["result"]["coefficients"], serde_json::json!([]));
    assert_eq!(v["result"]["dimension"], Value::Null);
}

#[test]
fn cells_examples() {
    let v = json(&["cells", "-n", "3", "-e", "1,2"]);
    let mut dims: Vec<u64> = v["result"]["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["dim_hom_plus"].as_u64().unwrap())
        .collect();
    dims.sort();
    assert_eq!(dims, vec![0, 1, 1, 2]);
    let v = json(&["cells", "-n", "2", "-e", "1,1"]);
    let cells = v["result"]["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 1);
    assert_eq!(cells[0]["summands"], serde_json::json!(["2(R1)"]));
    let v = json(&["cells", "-n", "4", "-e", "2,2"]);
    assert_eq!(v["result"]["matches_closed_form"], true);
    assert_eq!(v["result"]["assembled"], v["result"]["closed_form"]);
}

#[test]
fn count_fq_examples() {
    let v = json(&["count-fq", "-t", "R", "-n", "3", "-e", "1,2", "-q", "2"]);
    assert_eq!(v["result"]["count"], "9");
    assert_eq!(v["result"]["verdict"], "MATCH");
    let v = json(&["count-fq", "-t", "R", "-n", "2", "-e", "1,1", "-q", "3"]);
    assert_eq!(v["result"]["count"], "1");
    let o = qgrass(&["count-fq", "-t", "R", "-n", "6", "-e", "3,3", "-q", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = qgrass(&["count-fq", "-t", "R", "-n", "2", "-e", "1,1", "-q", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cluster_examples() {
    let o = qgrass(&["cluster", "z", "-n", "1"]);
    let out = stdout(&o);
    assert!(out.starts_with("x1^-1*x2^-1 + x1*x2^-1 + x1^-1*x2\n"), "{out}");
    assert!(out.contains("EQUAL"));
    let o = qgrass(&["cluster", "var", "-k", "3"]);
    assert_eq!(stdout(&o), "x1^-1 + x1^-1*x2^2\n");
    let v = json(&["cluster", "u", "-n", "1"]);
    assert_eq!(v["result"]["verdict"], "EQUAL");
    assert_eq!(v["result"]["recurrence"]["text"], "x2^-1*x3^-1 + x1^-1*x2^-1 + x1*x3^-1 + x1^-1*x3");
    let v = json(&["cluster", "var", "-k", "-1"]);
    assert_eq!(v["result"]["terms"].as_array().unwrap().len(), 4);
    let v = json(&["cluster", "cc", "-t", "I", "-n", "2"]);
    assert_eq!(v["result"]["cluster_variable"], 5);
    let v = json(&["cluster", "z", "-n", "2", "--cluster", "2"]);
    assert_eq!(v["result"]["in_cluster"]["nonnegative"], true);
    let v = json(&["cluster", "cc", "-t", "R", "-n", "2", "--stratum", "1"]);
    assert_eq!(v["result"]["text"], "1");
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        vec!["poincare", "-t", "I", "-n", "3", "-e", "2,2"],
        vec!["cells", "-n", "4", "-e", "1,3"],
        vec!["strata", "-n", "4", "-e", "2,2"],
        vec!["fixed-points", "-n", "3", "-e", "1,2"],
        vec!["cluster", "s", "-n", "3"],
        vec!["euler", "--rep", "P0+R2", "-e", "1,2"],
    ] {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let raw = stdout(&qgrass(&full));
        let v: Value = serde_json::from_str(&raw).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(raw, again, "{args:?}");
    }
}

#[test]
fn csv_output() {
    let o = qgrass(&["strata", "-n", "2", "-e", "1,1", "--format", "csv"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k,n,e,euler_characteristic,exact_euler_characteristic,poincare"));
    assert_eq!(lines.next(), Some("0,2,\"1,1\",1,0,1"));
    assert_eq!(lines.next(), Some("1,0,\"0,0\",1,1,1"));
}

#[test]
fn environment_overrides() {
    let o = Command::new(env!("CARGO_BIN_EXE_qgrass"))
        .args(["poincare", "-n", "3", "-e", "1,2"])
        .env("QG_FORMAT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["parameters"]["type"], "R");
    let o = Command::new(env!("CARGO_BIN_EXE_qgrass"))
        .args(["poincare", "-n", "3", "-e", "1,2"])
        .env("QG_MAX_RANK", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["poincare", "-n", "3", "-e", "1;2"],
        vec!["poincare", "-n", "3", "-e", "1,2,3"],
        vec!["poincare", "-t", "R", "-n", "0", "-e", "0,0"],
        vec!["frobnicate"],
        vec!["euler", "-e", "1,1"],
    ] {
        assert_eq!(qgrass(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn selftest_passes() {
    let o = qgrass(&["selftest"]);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn fixed_points_report_k_invariant() {
    let v = json(&["fixed-points", "-n", "2", "-e", "1,1"]);
    let fps = v["result"]["fixed_points"].as_array().unwrap();
    assert_eq!(fps.len(), 1);
    assert_eq!(fps[0]["k_invariant"], 1);
    assert_eq!(fps[0]["tangent_dim"], 1);
    let v = json(&["fixed-points", "-t", "I", "-n", "2", "-e", "2,2"]);
    assert!(v["result"]["count"].as_u64().unwrap() > 0);
}
