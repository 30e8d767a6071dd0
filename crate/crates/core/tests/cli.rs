use std::process::{Command, Output};

fn qsd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsd")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn params_prints_quintuples() {
    let o = qsd(&["params", "--v", "12", "--y", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "12,22,11,6,5,y=3\n");
    let o = qsd(&["params", "--v", "22", "--y", "2"]);
    assert!(stdout(&o).lines().any(|l| l == "22,77,21,6,5,y=2"));
}

#[test]
fn params_rejects_bad_input() {
    assert_eq!(qsd(&["params", "--v", "4"]).status.code(), Some(2));
    assert_eq!(qsd(&["params", "--v", "12", "--y", "11"]).status.code(), Some(2));
    assert_eq!(qsd(&["params", "--v", "twelve"]).status.code(), Some(2));
}

#[test]
fn xgcd_certificate() {
    let o = qsd(&["xgcd", "--f", "q^12*(q^8-1)*(q^4-1) - 3", "--g", "3*q^12*(q^8+q^4+1)*(q^6-1)*(q^2-1)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "h = q^8+q^4+1"), "{out}");
    assert!(out.lines().any(|l| l == "c = 549"), "{out}");
    let o = qsd(&["xgcd", "--f", "q^-1", "--g", "q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
}

#[test]
fn single_case_and_errors() {
    let o = qsd(&["run", "--case", "F4:3D4", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 8);
    assert_eq!(qsd(&["run", "--case", "F4:nothing"]).status.code(), Some(2));
    assert_eq!(qsd(&["run", "--case", "F4:3D4", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(qsd(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn catalog_lists_every_case() {
    let o = qsd(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("G2:A2+ ")));
    assert!(out.lines().any(|l| l.starts_with("E6:P3 ")));
}
