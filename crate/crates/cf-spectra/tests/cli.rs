//! End-to-end checks of the command-line surface: deterministic output
//! bytes, re-parseable printed values, CSV emission, and exit codes.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_cf-spectra"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code(),
    )
}

#[test]
fn eval_is_deterministic_and_roundtrips() {
    let (out1, _, code1) = run(&["eval", "[0;(2,1,2,2)]"]);
    let (out2, _, code2) = run(&["eval", "[0;(2,1,2,2)]"]);
    assert_eq!(code1, Some(0));
    assert_eq!(code2, Some(0));
    assert_eq!(out1, out2, "identical inputs must give identical bytes");
    let v: serde_json::Value = serde_json::from_str(&out1).unwrap();
    let text = v["output"]["value"]["text"].as_str().unwrap();
    let parsed = cf_spectra::report::parse_value(text).unwrap();
    let expected = cf_spectra::report::parse_value("(-4 + 1*sqrt(30))/4").unwrap();
    assert_eq!(parsed.compare(&expected), std::cmp::Ordering::Equal);
    assert_eq!(v["output"]["value"]["minpoly"][2].as_str(), Some("8"));
}

#[test]
fn spectrum_commands() {
    let (out, _, code) = run(&["spectrum", "m", "<(1)||(1)>"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["output"]["value"]["text"].as_str(), Some("(0 + 1*sqrt(5))/1"));
    assert_eq!(v["output"]["attained"], true);

    let (out, _, code) = run(&["spectrum", "mu", "[0;(2,2,1,2)]"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["output"]["value"]["text"].as_str(), Some("(0 + 4*sqrt(30))/7"));

    let (out, _, code) = run(&["spectrum", "lambda", "<(1)|2,2|(1,2)>", "--index", "0"]);
    assert_eq!(code, Some(0));
    assert!(out.contains("\"value\""));
}

#[test]
fn zeta_writes_csv() {
    let dir = std::env::temp_dir().join("cf-spectra-test-csv");
    let _ = std::fs::remove_file(&dir);
    let path = dir.to_str().unwrap();
    let (out, _, code) = run(&["zeta", "2", "3", "--csv", path]);
    assert_eq!(code, Some(0), "stdout: {out}");
    let csv = std::fs::read_to_string(&dir).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("index,lo,hi"));
    let first = lines.next().unwrap();
    assert!(first.starts_with("1,"));
    // every row is index,lo,hi with lo ≤ hi
    for line in csv.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 3);
        let lo: f64 = cols[1].parse().unwrap();
        let hi: f64 = cols[2].parse().unwrap();
        assert!(lo <= hi);
    }
    let _ = std::fs::remove_file(&dir);
}

#[test]
fn verify_ok_and_exit_codes() {
    let (_, _, code) = run(&["verify", "parity", "--trials", "300"]);
    assert_eq!(code, Some(0));
    // parse failure → usage exit code 2
    let (_, err, code) = run(&["eval", "[0; x]"]);
    assert_eq!(code, Some(2));
    assert!(err.contains("error"));
    // unknown lemma → 2
    let (_, _, code) = run(&["verify", "nonsense"]);
    assert_eq!(code, Some(2));
}

#[test]
fn admissible_symbolic_targets() {
    let (out, _, code) = run(&[
        "admissible",
        "--target",
        "gbur-beta 1",
        "--max-period",
        "4",
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["output"]["verdict"].as_str(), Some("witness-found"));
    // β_1 = √10 = μ([0;(1,1,2)]): the witness is that necklace rotated
    let w = v["output"]["witness"].as_array().unwrap();
    assert_eq!(w.len(), 3);

    let (out, _, code) = run(&[
        "admissible",
        "--target",
        "[3;(6)]", // √10 as a continued fraction
        "--max-period",
        "3",
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["output"]["verdict"].as_str(), Some("witness-found"));
}
