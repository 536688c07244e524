use std::process::Command;

use altgamma::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("altgamma").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn table_text_and_bfile() {
    let (code, out, _) = call(&["table", "altB", "--from", "2", "--to", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "altB(2) = 3 + 2*x + 3*x^2  [recurrence]\naltB(3) = 11 + 13*x + 13*x^2 + 11*x^3  [recurrence]\n"
    );
    let (_, out, _) = call(&["table", "secant", "--to", "3", "--bfile"]);
    assert_eq!(out, "0 1\n1 1\n2 5\n3 61\n");
    let (_, out, _) = call(&["table", "xi", "--from", "4", "--to", "5", "--bfile"]);
    assert_eq!(out, "57 + 38*x + 5*x^2\n361 + 302*x + 61*x^2\n");
}

#[test]
fn table_json_carries_provenance() {
    let (code, out, _) = call(&["table", "M", "--from", "1", "--to", "2", "--json", "--enum-cap", "4"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["family"], "M");
    assert_eq!(v["rows"][1]["n"], 2);
    assert_eq!(v["rows"][1]["provenance"], "enumeration");
    assert_eq!(v["rows"][1]["poly"]["terms"][1]["coef"], "1");
}

#[test]
fn enumerate_and_derive() {
    let (_, out, _) = call(&["enumerate", "--stat", "altdes", "--n", "4"]);
    assert_eq!(out, "5 + 7*x + 7*x^2 + 5*x^3\n");
    let (_, out, _) = call(&["enumerate", "--stat", "snake", "--n", "3"]);
    assert_eq!(out, "11\n");
    let (_, out, _) = call(&["derive", "--grammar", "g2", "--seed", "e", "--steps", "2"]);
    assert_eq!(out, "3*e*y^2 + 2*e*x*y + 3*e*x^2\n");
    let (_, out, _) = call(&["derive", "--grammar", "e->e*(x+y); x->x^2+y^2; y->x^2+y^2", "--seed", "e", "--steps", "1"]);
    assert_eq!(out, "e*y + e*x\n");
}

#[test]
fn gamma_command() {
    let (code, out, _) = call(&["gamma", "--family", "altB", "--n", "4", "--scale", "-4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "[57, 38, 5]\n");
    let (code, _, _) = call(&["gamma", "--family", "P", "--n", "2", "--scale", "1"]);
    assert_eq!(code, EXIT_FAIL);
}

#[test]
fn verify_selection_and_exit_codes() {
    let (code, out, _) = call(&["verify", "thm.Q_identity", "--max-n", "10"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "PASS thm.Q_identity [n=0..10]\n1/1 passed\n");
    let (code, out, _) = call(&["verify", "egf", "--order", "8"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("7/7 passed\n"));
    let (code, _, err) = call(&["verify", "nonsense"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("unknown identity"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(call(&["table", "nope"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "--stat", "des", "--n", "12"]).0, EXIT_USAGE);
    assert_eq!(call(&["derive", "--grammar", "g9", "--seed", "e", "--steps", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["gamma", "--family", "altB", "--n", "2", "--scale", "x"]).0, EXIT_USAGE);
}

#[test]
fn environment_cap_is_honoured() {
    let bin = env!("CARGO_BIN_EXE_altgamma");
    let run = |cap: &str| {
        Command::new(bin)
            .args(["enumerate", "--stat", "des", "--n", "5"])
            .env("ALTGAMMA_ENUM_CAP", cap)
            .output()
            .unwrap()
    };
    let ok = run("3");
    assert!(ok.status.success());
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "1 + 26*x + 66*x^2 + 26*x^3 + x^4\n");
    assert_eq!(run("2").status.code(), Some(EXIT_USAGE));
    assert_eq!(run("lots").status.code(), Some(EXIT_USAGE));
}
