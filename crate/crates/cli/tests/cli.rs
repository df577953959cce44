use std::path::PathBuf;
use std::process::{Command, Output};

fn ms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ms"))
        .args(args)
        .output()
        .unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn groebner_basis() {
    let o = ms(&["gb", &data("double_line.ms")]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines, ["y^2", "x^2 + z0*y"]);
}

#[test]
fn filtration_text_and_json() {
    let o = ms(&["filt", &data("double_line.ms")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("multiplicity 4"), "{}", out);
    assert!(out.contains("type I true"), "{}", out);
    let o = ms(&[
        "filt",
        &data("double_line.ms"),
        "--format",
        "json",
        "--seed",
        "3",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["filtration"].as_array().unwrap().len(), 4);
    assert_eq!(v["seed"], 3);
}

#[test]
fn cm_reports_the_embedded_point() {
    let o = ms(&["cm", &data("embedded.ms"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["locally_cm"], false);
    assert_eq!(v["codim"], 2);
}

#[test]
fn hilbert_in_p_basis() {
    let o = ms(&["hilb", &data("double_line.ms"), "--pbasis"]);
    assert!(
        stdout(&o).contains("polynomial 4P2 - 4P1 + P0"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn verify_exit_codes() {
    let o = ms(&["verify", "example-2.9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("1/1 scenarios passed\n"));
    let o = ms(&["verify", "example-2.9", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ms(&["verify", "hm-hilbert", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"], "1/1 scenarios passed");
    assert_eq!(v["results"][0]["status"], "PASS");
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(ms(&["verify", "no-such-scenario"]).status.code(), Some(3));
    assert_eq!(
        ms(&["verify", "example-2.9", "--char", "4"]).status.code(),
        Some(3)
    );
    assert_eq!(ms(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(ms(&["gb", &data("bad.ms")]).status.code(), Some(3));
    assert_eq!(ms(&["filt", &data("embedded.ms")]).status.code(), Some(3));
}

#[test]
fn catalog_listing() {
    let o = ms(&["catalog", "list"]);
    let out = stdout(&o);
    assert!(out.contains("thm-3.14   18 entries"), "{}", out);
    assert!(out.contains("scenario nonexistence-3.3"));
}

#[test]
fn hilbert_polynomial_in_t() {
    let o = ms(&["hilb", &data("double_line.ms")]);
    assert!(
        stdout(&o).contains("polynomial 2*t^2 + 2*t + 1"),
        "{}",
        stdout(&o)
    );
}
