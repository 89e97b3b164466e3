//! End-to-end tests of the `hbraid` binary: exit-code contract, JSON output
//! schemas, seed determinism, and round-trips through the documented
//! grammars.

use std::process::{Command, Output};

use hbraid_core::{Endomorphism, PolyTerm, ReducedPolynomial};

fn hbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn equal_exit_codes() {
    let out = hbraid(&["equal", "-n", "2", "s1 s1'", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["equal"], serde_json::json!(true));

    let out = hbraid(&["equal", "-n", "2", "s1", "r1"]);
    assert_eq!(out.status.code(), Some(1));
    let payload = stdout_json(&out);
    assert_eq!(payload["equal"], serde_json::json!(false));
    assert_eq!(payload["separating_index"], serde_json::json!(2));

    let out = hbraid(&["equal", "-n", "4", "s1 s3", "s3 s1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let out = hbraid(&["equal", "-n", "2", "s1 s9", ""]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("out of range"), "stderr: {err}");

    let out = hbraid(&["magnus", "-n", "2", "x1 ?"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("byte 3"), "stderr: {err}");
}

#[test]
fn usage_errors_exit_2() {
    let out = hbraid(&["equal", "-n", "2", "s1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hbraid(&["torsion-check", "-p", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hbraid(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn artin_output_round_trips() {
    let out = hbraid(&["artin", "-n", "2", "s1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out),
        serde_json::json!({"n": 2, "images": ["x2", "x2' x1 x2"]})
    );
    let endo: Endomorphism = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(endo.image(1).to_string(), "x2");
}

#[test]
fn magnus_output_round_trips_in_canonical_order() {
    let out = hbraid(&["magnus", "-n", "3", "x2 x1 x2'"]);
    assert_eq!(out.status.code(), Some(0));
    let terms: Vec<PolyTerm> = serde_json::from_slice(&out.stdout).unwrap();
    let poly = ReducedPolynomial::from_json_terms(3, &terms).unwrap();
    assert_eq!(poly, hbraid_core::GroupWord::parse("x2 x1 x2'", 3).unwrap().magnus());
    // canonical order: degree then lexicographic
    let mut sorted = terms.clone();
    sorted.sort_by_key(|t| (t.m.len(), t.m.clone()));
    assert_eq!(terms, sorted);
}

#[test]
fn obstruction_schema_is_exact() {
    let out = hbraid(&["obstruction", "-n", "3", "r1 r2"]);
    assert_eq!(out.status.code(), Some(0));
    let payload = stdout_json(&out);
    let obj = payload.as_object().unwrap();
    assert_eq!(obj.len(), 3);
    assert_eq!(obj["f_value"], serde_json::json!("1"));
    assert_eq!(obj["lambda_moves_it"], serde_json::json!(true));
    assert_eq!(obj["classical_obstruction_holds"], serde_json::json!(false));
}

#[test]
fn torsion_check_passes_and_warns_on_composite() {
    let out = hbraid(&[
        "torsion-check", "-p", "3", "--trials", "40", "--max-len", "6", "--seed", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let payload = stdout_json(&out);
    assert_eq!(payload["passes"], serde_json::json!(40));
    assert!(!String::from_utf8_lossy(&out.stderr).contains("warning"));

    let out = hbraid(&[
        "torsion-check", "-p", "4", "--trials", "5", "--max-len", "4", "--seed", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn randomized_commands_are_byte_deterministic() {
    let a = hbraid(&["fuzz", "-n", "3", "--trials", "8", "--seed", "123"]);
    let b = hbraid(&["fuzz", "-n", "3", "--trials", "8", "--seed", "123"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = hbraid(&["fuzz", "-n", "3", "--trials", "8", "--seed", "124"]);
    assert_eq!(c.status.code(), Some(0));

    let t1 = hbraid(&["torsion-check", "-p", "2", "--trials", "10", "--seed", "3"]);
    let t2 = hbraid(&["torsion-check", "-p", "2", "--trials", "10", "--seed", "3"]);
    assert_eq!(t1.stdout, t2.stdout);
}

#[test]
fn fuzz_degenerate_single_strand() {
    let out = hbraid(&["fuzz", "-n", "1", "--trials", "10", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let payload = stdout_json(&out);
    for row in payload["properties"].as_array().unwrap() {
        assert_eq!(row["failures"], serde_json::json!(0));
        assert_eq!(row["passes"], serde_json::json!(10));
    }
}
