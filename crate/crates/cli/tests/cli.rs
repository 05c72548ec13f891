//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

use zetaquot_core::poly::PolyRecord;

fn zetaquot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetaquot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn table_p_prints_all_golden_rows() {
    let out = zetaquot(&["table", "p"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 8);
    assert!(text.starts_with("p_1(x) = x + 1\n"));
    assert!(text.contains(
        "p_8(x) = x^8 - 20x^7 + 42x^6 + 448x^5 + 105x^4 - 2492x^3 - 4116x^2 - 1904x"
    ));
}

#[test]
fn table_q_starts_at_three() {
    let out = zetaquot(&["table", "q"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 8);
    assert!(text.starts_with("q_3(x) = x - 2\n"));
}

#[test]
fn table_json_round_trips_byte_for_byte() {
    let out = zetaquot(&["table", "p", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let records: Vec<PolyRecord> = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(records.len(), 8);
    let reserialized = serde_json::to_string(&records).unwrap();
    assert_eq!(reserialized, text.trim_end());
}

#[test]
fn table_rejects_q_below_three() {
    let out = zetaquot(&["table", "q", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("n_max >= 3"));
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn table_csv_has_ascending_coefficients() {
    let out = zetaquot(&["table", "q", "--n-max", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text, "kind,n,coeffs\nq,3,-2;1\nq,4,-6;-3;1\n");
}

#[test]
fn quot_agrees_with_oracle() {
    let out = zetaquot(&["quot", "2", "--prec", "128"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("0.7307629694014384987260367313"));
    assert!(text.contains("enclosures overlap: yes"));
}

#[test]
fn quot_rejects_odd_index() {
    let out = zetaquot(&["quot", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("even"));
}

#[test]
fn lstar_value_of_second_polynomial() {
    let out = zetaquot(&["lstar", "2", "--prec", "128"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("1.7051135952700231636940857063"));
}

#[test]
fn lvalue_csv_rows() {
    let out = zetaquot(&["lvalue", "--n-max", "2", "--prec", "96", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,value,abs_err_le,prec_bits"));
    let row1 = lines.next().unwrap();
    assert!(row1.starts_with("1,0.693147180559945309417232121458"));
    assert!(row1.ends_with(",96"));
    let row2 = lines.next().unwrap();
    assert!(row2.starts_with("2,0.2876820724517809274392190059"));
}

#[test]
fn witness_emits_certificate() {
    let out = zetaquot(&["witness", "4", "--p-max", "100", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out).trim_end(),
        r#"{"n":4,"claim":"modp-irreducible","prime":5,"pass":true}"#
    );
}

#[test]
fn verify_quick_pass_over_all_suites() {
    let out = zetaquot(&[
        "verify", "all", "--n-max", "8", "--p-max", "7", "--prec", "128",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("suite exact: PASS"));
    assert!(text.contains("suite numeric: PASS"));
    assert!(text.contains("suite modular: PASS"));
    assert!(text.trim_end().ends_with("overall: PASS"));
}

#[test]
fn verify_csv_shape() {
    let out = zetaquot(&[
        "verify", "exact", "--n-max", "8", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("suite,check,pass,detail\n"));
    assert!(text.contains("exact,golden tables,true,"));
}

#[test]
fn out_flag_writes_file_and_keeps_stdout_silent() {
    let path = std::env::temp_dir().join("zetaquot-table-test.json");
    let _ = std::fs::remove_file(&path);
    let out = zetaquot(&[
        "table", "p", "--n-max", "2", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains(r#"{"kind":"p","n":1,"coeffs":["1","1"]}"#));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn precision_floor_is_enforced() {
    let out = zetaquot(&["lvalue", "--n-max", "2", "--prec", "32"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn desk_scale_cap_is_enforced() {
    let out = zetaquot(&["lstar", "500"]);
    assert_eq!(out.status.code(), Some(2));
}
