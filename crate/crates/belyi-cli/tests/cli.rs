//! Golden-output and exit-code tests for the command-line interface.

use std::process::{Command, Output};

fn belyi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_belyi"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[track_caller]
fn stdout_of(args: &[&str]) -> String {
    let out = belyi(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[track_caller]
fn line_of(args: &[&str]) -> String {
    stdout_of(args).trim_end().to_string()
}

#[test]
fn delta_text_e_basis() {
    assert_eq!(
        line_of(&["delta", "5", "1"]),
        "-[E_1]∧[E_2] + [E_1]∧[E_3] - [E_1]∧[E_4] - [E_2]∧[E_3] + [E_2]∧[E_4] - [E_3]∧[E_4]"
    );
    assert_eq!(
        line_of(&["delta", "5", "2"]),
        "-[E_1]∧[E_3] + [E_1]∧[E_4] - [E_2]∧[E_4]"
    );
}

#[test]
fn delta_latex() {
    assert_eq!(
        line_of(&["delta", "5", "2", "--basis", "e", "--format", "latex"]),
        "-[E_1]\\wedge[E_3]+[E_1]\\wedge[E_4]-[E_2]\\wedge[E_4]"
    );
}

#[test]
fn delta_t_basis() {
    assert_eq!(
        line_of(&["delta", "11", "6", "--basis", "t"]),
        "-T_1 + T_3 - T_4"
    );
    assert_eq!(
        line_of(&["delta", "11", "7", "--basis", "t"]),
        "-T_1 + T_2 - T_3 + T_5"
    );
    assert_eq!(
        line_of(&["delta", "11", "6", "--basis", "t", "--format", "latex"]),
        "-T_1+T_3-T_4"
    );
}

#[test]
fn delta_json_schema_and_roundtrip() {
    let raw = line_of(&["delta", "5", "2", "--format", "json"]);
    assert_eq!(
        raw,
        r#"{"basis":"E","c":2,"k":2,"n":5,"object":"delta","terms":[{"coeff":-1,"i":1,"j":3},{"coeff":1,"i":1,"j":4},{"coeff":-1,"i":2,"j":4}]}"#
    );
    // parsing and reserializing is byte-identical
    let value: serde_json::Value = serde_json::from_str(&raw).unwrap();
    assert_eq!(value.to_string(), raw);

    let raw_t = line_of(&["delta", "11", "6", "--basis", "t", "--format", "json"]);
    assert_eq!(
        raw_t,
        r#"{"basis":"T","c":8,"k":6,"n":11,"object":"delta","terms":[{"coeff":-1,"r":1},{"coeff":1,"r":3},{"coeff":-1,"r":4}]}"#
    );
    let value: serde_json::Value = serde_json::from_str(&raw_t).unwrap();
    assert_eq!(value.to_string(), raw_t);
}

#[test]
fn word_output() {
    assert_eq!(
        line_of(&["word", "5", "1"]),
        "E_1·E_4·E_3^-1·E_2·E_1^-1·E_4^-1·E_3·E_2^-1"
    );
    assert_eq!(
        line_of(&["word", "5", "2"]),
        "E_1·E_3·E_2^-1·E_4^-1·E_2·E_1^-1·E_4·E_3^-1"
    );
    let with_placeholders = line_of(&["word", "5", "1", "--placeholders"]);
    assert_eq!(
        with_placeholders,
        "E_1·E_0^-1·E_4·E_3^-1·E_2·E_1^-1·E_0·E_4^-1·E_3·E_2^-1"
    );
    assert_eq!(with_placeholders.split('·').count(), 10);
}

#[test]
fn between_output() {
    assert_eq!(
        line_of(&["between", "5", "1", "0"]),
        "E_4·E_3^-1·E_2·E_1^-1"
    );
    assert_eq!(line_of(&["between", "5", "2", "0"]), "E_3·E_2^-1");
    assert_eq!(
        line_of(&["between", "5", "1", "1"]),
        "E_0·E_4^-1·E_3·E_2^-1"
    );
}

#[test]
fn sheets_output() {
    let out = stdout_of(&["sheets", "5", "2"]);
    assert!(out.contains("alpha: 0 -> 2"));
    assert!(out.contains("tau: 0 -> 4"));
    assert!(out.contains("xi: 0 -> 0"));
    let out = stdout_of(&["sheets", "5", "1"]);
    assert!(out.contains("alpha: 0 -> 3"));
}

#[test]
fn validate_output() {
    let out = stdout_of(&["validate", "11", "6"]);
    assert!(out.contains("c = 8"));
    assert!(out.contains("genus = 5"));
    assert!(out.contains("inertia = (1, 6, 4)"));
}

#[test]
fn fermat_image_output() {
    assert_eq!(
        line_of(&["fermat-image", "5", "2", "1", "1"]),
        "[E_1] + [E_2] - [E_3]"
    );
    assert_eq!(line_of(&["fermat-image", "5", "2", "0", "0"]), "0");
    assert_eq!(line_of(&["fermat-image", "5", "2", "0", "1"]), "0");
}

#[test]
fn subst_output() {
    assert_eq!(
        line_of(&["subst", "5", "2", "3"]),
        "-[E_1]∧[E_2] - [E_2]∧[E_3] - [E_3]∧[E_4]"
    );
    assert_eq!(
        line_of(&["subst", "5", "2", "1"]),
        line_of(&["delta", "5", "2"])
    );
}

#[test]
fn modsym_output() {
    let out = stdout_of(&["modsym", "5", "2"]);
    assert!(out.contains("rho_1 = [E_1]"));
    assert!(out.contains("rho_4 = [E_4]"));
    let out = stdout_of(&["modsym", "5", "2", "--check", "--fuzz-words", "500"]);
    assert!(out.contains("modsym suite: ok"));
}

#[test]
fn invalid_input_exits_2() {
    let out = belyi(&["delta", "6", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("gcd"), "stderr was: {stderr}");

    let out = belyi(&["delta", "5", "4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = belyi(&["verify", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = belyi(&["subst", "9", "1", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // unknown subcommands are also usage errors
    let out = belyi(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_sweep_exits_0() {
    let out = belyi(&["verify", "--max-n", "11", "--fuzz-words", "200"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("checked 21 pairs"), "stdout was: {stdout}");
    assert!(stdout.contains("sign -1"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["delta", "7", "3", "--format", "json"][..],
        &["word", "7", "3"][..],
        &["sheets", "7", "3"][..],
        &["modsym", "7", "3"][..],
    ] {
        assert_eq!(belyi(args).stdout, belyi(args).stdout);
    }
}
