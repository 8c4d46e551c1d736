use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unstable-ops")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn adams_operation_passes() {
    let o = run(&["check", "psi(2)", "--trunc", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["truncation"], 10);
}

#[test]
fn identity_sequence_fails_at_two() {
    let o = run(&["check", "[0,1,2,3]"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let first = v["entries"].as_array().unwrap().iter().find(|e| e["pass"] == false).unwrap();
    assert_eq!(first["index"], 2);
    assert_eq!(first["value"], "1/2");
}

#[test]
fn table_contains_fourth_row() {
    let o = run(&["table", "--trunc", "4", "--format", "plain"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("C_4 = (1/24)(0,-6,11,-6,1)"));
    let o = run(&["table", "--trunc", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"][4]["numerators"], serde_json::json!(["0", "-6", "11", "-6", "1"]));
    assert_eq!(v["rows"][4]["denominator"], "24");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "psi("]).status.code(), Some(2));
    assert_eq!(run(&["check", "[1,2]", "--trunc", "5"]).status.code(), Some(3));
    assert_eq!(run(&["check", "psi(2)", "--prime", "9"]).status.code(), Some(2));
    assert_eq!(run(&["check", "psi(2)", "--summand"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "b(12)*etaR(x1)", "--trunc", "10"]).status.code(), Some(3));
    assert_eq!(run(&["fgl-dump", "--trunc", "40"]).status.code(), Some(3));
    assert_eq!(run(&["pair", "psi(2)", "--poly", "w^5", "--trunc", "3"]).status.code(), Some(3));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn json_is_byte_stable_with_sorted_keys() {
    let a = stdout(&run(&["check", "2*psi(3) - sigma(2)", "--trunc", "8"]));
    let b = stdout(&run(&["check", "2*psi(3) - sigma(2)", "--trunc", "8"]));
    assert_eq!(a, b);
    let keys: Vec<usize> = ["\"entries\"", "\"flavor\"", "\"prime\"", "\"truncation\"", "\"verdict\""]
        .iter()
        .map(|k| a.rfind(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    assert!(!a.contains('.'), "rationals must be strings, never floats");
}

#[test]
fn file_input_and_out_flag() {
    let dir = std::env::temp_dir().join(format!("unstable-ops-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("seq.json");
    std::fs::write(&input, r#"["1", 2, "4", "8", "16"]"#).unwrap();
    let out = dir.join("cert.json");
    let o = run(&["check", "--file", input.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["truncation"], 4);

    std::fs::write(&input, r#"[1.5]"#).unwrap();
    assert_eq!(run(&["check", "--file", input.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn convert_and_pair() {
    let o = run(&["convert", "psi(2)", "--trunc", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["output"], serde_json::json!(["1", "2", "1", "0", "0"]));
    let o = run(&["convert", "[1,2,1,0,0]", "--from", "sigma", "--format", "csv"]);
    assert!(stdout(&o).starts_with("index,sigma,lambda\n0,1,1\n1,2,2\n2,1,4\n"));
    let o = run(&["pair", "psi(3)", "--poly", "w^2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "9");
}

#[test]
fn plocal_and_summand() {
    let o = run(&["check", "[0,1,2]", "--prime", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "psi(2)", "--prime", "3", "--summand", "--trunc", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["flavor"], "summand");
    assert_eq!(v["truncation"], 10);
    let o = run(&["check", "[1,4,\"49/3\"]", "--prime", "3", "--summand"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn eval_worked_example() {
    let o = run(&["eval", "b(3)*etaR(x1)", "--basis", "x1^3,a21*x1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dictionary_forms"]["x1^3"], serde_json::json!(["0", "1/3", "-1/2", "1/6"]));
    assert_eq!(v["dictionary_forms"]["a21*x1"], serde_json::json!(["0", "-1/3", "0", "1/3"]));
    let o = run(&["eval", "e^4*etaR(x)", "--lambda", "psi(3)"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "9");
}

#[test]
fn verify_paper_passes() {
    let o = run(&["verify-paper", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("criterion,")).count(), 12);
    assert!(!text.contains(",false,"));
}
