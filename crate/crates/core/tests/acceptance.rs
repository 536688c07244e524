//! Acceptance gate. Runs every criterion exactly and prints one line each;
//! exits nonzero if any criterion fails.

use std::ops::RangeInclusive;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigInt;

use altgamma::egfseries::{egf_suite, DEFAULT_ORDER};
use altgamma::exactpoly::{rat, Poly, Var};
use altgamma::families::{factorial, Families, Fault, RecurrenceId, ScalarSource};
use altgamma::grammar::change_of_variables_check;
use altgamma::permstats::{count, EnumCap, Predicate};
use altgamma::report::VerdictReport;
use altgamma::verify::{self, SuiteOptions, SUITE};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(s: &str) -> Poly {
    Poly::parse(s).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| c.into()).collect()
}

/// The report must pass and must have covered exactly `want`.
fn covered(r: VerdictReport, want: RangeInclusive<usize>) -> Outcome {
    if !r.passed {
        return Err(r.to_string());
    }
    if r.range != Some((*want.start(), *want.end())) {
        return Err(format!("{}: ran over {:?}, wanted {:?}", r.id, r.range, want));
    }
    Ok(())
}

fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    let errs: Vec<String> = outcomes.into_iter().filter_map(Result::err).collect();
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs.join("; "))
    }
}

fn golden() -> Outcome {
    let f = Families::default();
    let alt_a = ["1", "1+x", "2+2x+2x^2", "5+7x+7x^2+5x^3", "16+26x+36x^2+26x^3+16x^4"];
    let alt_b = ["1", "1+x", "3+2x+3x^2", "11+13x+13x^2+11x^3", "57+76x+118x^2+76x^3+57x^4"];
    let xi = ["1", "1", "3+x", "11+5x", "57+38x+5x^2", "361+302x+61x^2"];
    let mut out = Vec::new();
    for (i, w) in alt_a.iter().enumerate() {
        let got = f.alt_a(i + 1).map_err(|e| e.to_string())?;
        out.push(if got == p(w) { Ok(()) } else { Err(format!("altA({}) = {got}", i + 1)) });
    }
    for (n, w) in alt_b.iter().enumerate() {
        let got = f.alt_b(n).map_err(|e| e.to_string())?;
        out.push(if got == p(w) { Ok(()) } else { Err(format!("altB({n}) = {got}")) });
    }
    for (n, w) in xi.iter().enumerate() {
        let got = f.xi(n).map_err(|e| e.to_string())?;
        out.push(if got == p(w) { Ok(()) } else { Err(format!("xi({n}) = {got}")) });
    }
    all(out)
}

fn oracle() -> Outcome {
    let f = Families::default();
    all([
        covered(verify::verify_oracle_alt_a(&f, 1..=9), 1..=9),
        covered(verify::verify_oracle_alt_b(&f, 0..=8), 0..=8),
    ])
}

fn grammars() -> Outcome {
    let f = Families::default();
    all([
        covered(verify::verify_grammar_g2(&f, 0..=12), 0..=12),
        covered(verify::verify_grammar_g1(&f, 0..=12), 0..=12),
        covered(verify::verify_grammar_eulerian(&f, 1..=7), 1..=7),
        covered(change_of_variables_check(10), 0..=10),
    ])
}

fn egf() -> Outcome {
    let f = Families::default();
    let reports = egf_suite(&f, DEFAULT_ORDER);
    if reports.len() != 7 {
        return Err(format!("expected 7 checks, got {}", reports.len()));
    }
    all(reports.into_iter().map(|r| {
        let top = if r.id == "egf.altB_pde" { DEFAULT_ORDER - 1 } else { DEFAULT_ORDER };
        covered(r, 0..=top)
    }))
}

fn identities() -> Outcome {
    let f = Families::default();
    all([
        covered(verify::verify_thm_leftpeak(&f, 1..=12), 1..=12),
        covered(verify::verify_q_identity(&f, 0..=25), 0..=25),
        covered(verify::verify_p_identity(&f, 1..=25), 1..=25),
        covered(verify::verify_convolution(&f, 1..=15), 1..=15),
        covered(verify::verify_gamma_a(&f, 1..=20), 1..=20),
        covered(verify::verify_gamma_b(&f, 0..=20), 0..=20),
        covered(verify::verify_xi_lpk(&f, 1..=8, 0..=25), 0..=25),
        covered(verify::verify_simsun_gamma_a(&f, 0..=7), 0..=7),
        covered(verify::verify_petersen_type_b(&f, 1..=7), 1..=7),
    ])
}

fn boundary() -> Outcome {
    let f = Families::default();
    let mut out = Vec::new();
    let springer = ints(&[1, 1, 3, 11, 57, 361]);
    for (n, want) in springer.iter().enumerate() {
        for src in [ScalarSource::AltB, ScalarSource::Xi, ScalarSource::Enumeration, ScalarSource::Egf] {
            let got = f.springer(n, src).map_err(|e| e.to_string())?;
            out.push(if &got == want { Ok(()) } else { Err(format!("s_{n} via {src:?} = {got}")) });
        }
    }
    for n in 0..=8 {
        let snakes = BigInt::from(count(Predicate::Snake, n, &f.cap).map_err(|e| e.to_string())?);
        let egf = f.springer(n, ScalarSource::Egf).map_err(|e| e.to_string())?;
        out.push(if snakes == egf { Ok(()) } else { Err(format!("snakes({n}) = {snakes}, s_{n} = {egf}")) });
    }
    let secant = ints(&[1, 1, 5, 61]);
    for (m, want) in secant.iter().enumerate() {
        for src in [ScalarSource::Enumeration, ScalarSource::Xi, ScalarSource::Egf] {
            let got = f.secant(2 * m, src).map_err(|e| e.to_string())?;
            out.push(if &got == want { Ok(()) } else { Err(format!("E_{} via {src:?} = {got}", 2 * m)) });
        }
    }
    for n in 0..=20 {
        let v = f.xi(n).map_err(|e| e.to_string())?.eval_at(&Var::new("x"), &rat(-1)).map_err(|e| e.to_string())?;
        let want = factorial(n);
        out.push(if v == want.clone().into() { Ok(()) } else { Err(format!("xi_{n}(-1) = {v}")) });
    }
    out.push(covered(verify::verify_boundary(&f, 0..=12), 0..=12));
    all(out)
}

fn structure() -> Outcome {
    let f = Families::default();
    all([
        covered(verify::verify_palindromic_unimodal(&f, 0..=20), 0..=20),
        covered(verify::verify_insertion(&f, 1..=6), 1..=6),
        covered(verify::verify_altdes_altasc(&f, 0..=6), 0..=6),
    ])
}

fn verify_all_output() -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_altgamma"))
        .args(["verify", "all"])
        .env_remove("ALTGAMMA_ENUM_CAP")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("verify all exited with {}", out.status));
    }
    Ok(out.stdout)
}

/// First suite member to fail under `fault`, if any.
fn catcher(fault: Fault) -> Option<&'static str> {
    let fam = Families::new(EnumCap::from_single(5)).with_fault(fault);
    SUITE.iter().find(|(_, check)| !check(&fam, 10, 10).passed).map(|(id, _)| *id)
}

fn determinism() -> Outcome {
    let first = verify_all_output()?;
    let second = verify_all_output()?;
    if first != second {
        return Err("two runs of `verify all` differ".into());
    }
    let seq = verify::run_suite(&SuiteOptions { mode: altgamma::par::ExecMode::Sequential, ..SuiteOptions::default() })
        .map_err(|e| e.to_string())?;
    let seq: String = seq.iter().map(|r| format!("{r}\n")).collect();
    if !String::from_utf8_lossy(&first).starts_with(&seq) {
        return Err("sequential and parallel reports differ".into());
    }

    let base = Families::default().recurrences;
    let mut missed = Vec::new();
    let mut tried = 0;
    for id in RecurrenceId::ALL {
        for slot in 0..base.slot_count(id) {
            for delta in [1, -1] {
                tried += 1;
                if catcher(Fault { target: id, slot, delta }).is_none() {
                    missed.push(format!("{id}[{slot}]{delta:+}"));
                }
            }
        }
    }
    if missed.is_empty() {
        Ok(())
    } else {
        Err(format!("{} of {tried} faults not caught: {}", missed.len(), missed.join(", ")))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden polynomials", golden),
        ("oracle equivalence", oracle),
        ("grammar equivalence", grammars),
        ("generating functions", egf),
        ("identity suite", identities),
        ("boundary scalars", boundary),
        ("structural properties", structure),
        ("determinism and fault injection", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name} ({:.1?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
