//! End-to-end checks of the command-line interface: exit codes, output
//! shapes, and byte-identical JSON round-trips.

use std::process::{Command, Output};

use halphen_cli::Certificate;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_halphen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn params_order_one_plain() {
    let out = run(&["params", "--order", "1"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.contains(&"-e".to_string()));
    assert!(lines.contains(&"-e^2".to_string()));
}

#[test]
fn params_order_two_has_eleven_values() {
    let out = run(&["params", "--order", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 11);
    for v in ["-1", "1/2", "2"] {
        assert!(stdout(&out).lines().any(|l| l == v));
    }
}

#[test]
fn cubics_order_one_contains_the_classical_forms() {
    let out = run(&["cubics", "--order", "1", "--format", "plain"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 8);
    // x^2*y + y^2*z + x*z^2 in the fixed monomial order.
    assert!(text.contains("x^2*y+x*z^2+y^2*z"));
    assert!(text.contains("x^3+e*y^3+e^2*z^3"));
}

#[test]
fn hindex_values_and_table() {
    let out = run(&["hindex", "--n", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "-176/49");
    let table = run(&["hindex", "--table", "3..12"]);
    assert!(table.status.success());
    assert_eq!(stdout(&table).lines().count(), 4);
    assert!(stdout(&table).starts_with("h(3) = -2/1"));
    let bad = run(&["hindex", "--n", "7"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("\"pass\": false"));
}

#[test]
fn census_json_roundtrips_byte_identically() {
    let out = run(&["census", "--order", "1", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let parsed: Certificate<halphen::audit::CensusReport> =
        serde_json::from_str(&text).expect("valid certificate JSON");
    assert!(parsed.pass);
    assert_eq!(parsed.result.quadruple_total, 0);
    let reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    assert_eq!(text.trim_end(), reserialized);
}

#[test]
fn hesse_and_abelian_verify_pass() {
    let hesse = run(&["hesse", "verify"]);
    assert!(hesse.status.success());
    let parsed: Certificate<halphen_cli::HesseReport> =
        serde_json::from_str(&stdout(&hesse)).expect("hesse certificate");
    assert!(parsed.pass);
    assert_eq!(parsed.result.dual_hesse.incidences, 36);

    let abelian = run(&["abelian", "verify", "--seed", "7"]);
    assert!(abelian.status.success());
    let parsed: Certificate<halphen_cli::AbelianReport> =
        serde_json::from_str(&stdout(&abelian)).expect("abelian certificate");
    assert!(parsed.pass);
    assert_eq!(parsed.result.seeded_psi_checks, 100);
}

#[test]
fn usage_errors_exit_two() {
    let unknown = run(&["census", "--order", "1", "--bogus-flag"]);
    assert_eq!(unknown.status.code(), Some(2));
    let missing = run(&["nonsense"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn check_failures_exit_one_with_witness() {
    let out = run(&["params", "--order", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let witness: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("witness JSON");
    assert_eq!(witness["pass"], serde_json::Value::Bool(false));
    assert!(witness["error"].as_str().unwrap().contains("9"));
}

#[test]
fn numeric_params_agree_with_exact_rationals() {
    let out = run(&["params", "--order", "1", "--numeric", "--digits", "40"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    // -e and -e^2 embed to 0.5 -+ 0.866...i.
    assert!(text.contains("0.5000000000"));
    assert!(text.contains("0.8660254037"));
}
