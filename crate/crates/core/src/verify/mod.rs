//! The identity harness. Every check compares values obtained by different
//! routes (recurrence, enumeration, grammar, generating function, or an
//! expansion assembled from another family) and reports the first failure.

mod gamma;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{Zero};
use thiserror::Error;

pub use gamma::{gamma_extract, GammaError, GammaExpansion};

use crate::egfseries;
use crate::exactpoly::{rat, Poly, Rational, Var};
use crate::families::{
    binomial, factorial, shift_x, Families, FamilyError, Fault, PeakSource, Provenance,
};
use crate::grammar::{self, BuiltinGrammar, Grammar};
use crate::par::{self, ExecMode};
use crate::permstats::{self, EnumCap, Predicate, Statistic};
use crate::report::{compare_in_x, Counterexample, VerdictReport};

fn x() -> Var {
    Var::new("x")
}

fn p(src: &str) -> Poly {
    Poly::parse(src).expect("literal polynomial")
}

fn int_poly(row: &[BigInt]) -> Poly {
    Poly::from_int_coeffs(&x(), row)
}

fn family_cex(n: usize, e: FamilyError) -> Counterexample {
    Counterexample::at(e.row().unwrap_or(n), e.to_string())
}

fn bounds(r: &RangeInclusive<usize>) -> Option<(usize, usize)> {
    Some((*r.start(), *r.end()))
}

/// `Σ_k scale^k g_k x^k (1+x)^(m-2k)` for the coefficients `g` of a row.
fn assemble_gamma(g: &Poly, scale: i64, m: usize) -> Poly {
    let c = g.coeffs_in(&x()).expect("row in x");
    let one_plus_x = p("1+x");
    c.iter()
        .enumerate()
        .filter(|(_, gk)| !gk.is_zero())
        .map(|(k, gk)| {
            Poly::monomial(&x(), k as u32, gk * Rational::from_integer(BigInt::from(scale).pow(k as u32)))
                * one_plus_x.pow((m - 2 * k) as u32)
        })
        .sum()
}

/// Rows `B̂_0 ..= B̂_hi` or the failure they raise, as a counterexample.
fn alt_b_polys(fam: &Families, hi: usize) -> Result<Vec<Poly>, Counterexample> {
    let rows = fam.alt_b_rows(hi).map_err(|e| family_cex(0, e))?;
    Ok(rows.iter().map(|r| int_poly(r)).collect())
}

/// Rows `Â_0 ..= Â_hi`, with `Â_0` set to zero (it is not defined).
fn alt_a_polys(fam: &Families, hi: usize) -> Result<Vec<Poly>, Counterexample> {
    let rows = fam.alt_a_rows(hi).map_err(|e| family_cex(1, e))?;
    let mut out = vec![Poly::zero()];
    out.extend(rows.iter().map(|r| int_poly(r)));
    Ok(out)
}

fn xi_polys(fam: &Families, hi: usize) -> Result<Vec<Poly>, Counterexample> {
    let rows = fam.xi_rows(hi).map_err(|e| family_cex(0, e))?;
    Ok(rows.iter().map(|r| int_poly(r)).collect())
}

/// Shared shape of every range check: fetch data once, then test each `n`.
fn ranged<D, L, C>(id: &str, ns: RangeInclusive<usize>, load: L, check: C) -> VerdictReport
where
    L: FnOnce(usize) -> Result<D, Counterexample>,
    C: Fn(&D, usize) -> Result<(), Counterexample>,
{
    if ns.is_empty() {
        return VerdictReport::pass(id, None).with_note("empty range");
    }
    let data = match load(*ns.end()) {
        Ok(d) => d,
        Err(cex) => return VerdictReport::fail(id, bounds(&ns), cex),
    };
    VerdictReport::over_range(id, ns, |n| check(&data, n))
}

/// `B̂_n = Σ_k 2^k M(n,k) (1+x²)^k (1+x)^(n-2k)`, checked term by term and
/// in the cleared form `(1+x)^n B̂_n = Σ_k M(n,k) (2+2x²)^k (1+x)^(2n-2k)`.
pub fn verify_thm_leftpeak(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    let ns = (*ns.start()).max(1)..=*ns.end();
    ranged("thm.leftpeak", ns, |hi| alt_b_polys(fam, hi), |b, n| {
        let (m, _) = fam.left_peak_m_default(n).map_err(|e| family_cex(n, e))?;
        let mc = m.coeffs_in(&x()).expect("row in x");
        let rhs: Poly = mc
            .iter()
            .enumerate()
            .map(|(k, c)| {
                (p("1+x^2").pow(k as u32) * p("1+x").pow((n - 2 * k) as u32))
                    .scale(&(c * Rational::from_integer(BigInt::from(2).pow(k as u32))))
            })
            .sum();
        compare_in_x(n, "B^_n", &b[n], &rhs)?;
        let cleared = m
            .binomial_substitute(&x(), n as u32, &p("2+2x^2"), &p("(1+x)^2"))
            .map_err(|e| Counterexample::at(n, e.to_string()))?;
        compare_in_x(n, "(1+x)^n B^_n", &(p("1+x").pow(n as u32) * &b[n]), &cleared)
    })
}

/// `B_n = Σ_k 4^k M(n,k) x^k (1+x)^(n-2k)` against brute-force `des_B`.
pub fn verify_petersen_type_b(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    let ns = (*ns.start()).max(1)..=(*ns.end()).min(fam.cap.signed);
    ranged("thm.petersen_typeB", ns, |_| Ok(()), |_, n| {
        let b = fam.euler_b(n, Provenance::Enumeration).map_err(|e| family_cex(n, e))?;
        let (m, _) = fam.left_peak_m_default(n).map_err(|e| family_cex(n, e))?;
        compare_in_x(n, "B_n", &b, &assemble_gamma(&m, 4, n))
    })
    .with_note("4^i read as 4^k")
}

/// `B̂_n = (1-x)^n Q_n((1+x)/(1-x))`.
pub fn verify_q_identity(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    ranged(
        "thm.Q_identity",
        ns,
        |hi| Ok((alt_b_polys(fam, hi)?, fam.q_rows(hi))),
        |(b, q), n| {
            let rhs = int_poly(&q[n])
                .binomial_substitute(&x(), n as u32, &p("1+x"), &p("1-x"))
                .map_err(|e| Counterexample::at(n, e.to_string()))?;
            compare_in_x(n, "B^_n", &b[n], &rhs)
        },
    )
}

/// `2^n (1+x²) Â_n = (1-x)^(n+1) P_n((1+x)/(1-x))`.
pub fn verify_p_identity(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    let ns = (*ns.start()).max(1)..=*ns.end();
    ranged(
        "thm.P_identity",
        ns,
        |hi| Ok((alt_a_polys(fam, hi)?, fam.p_rows(hi))),
        |(a, pr), n| {
            let lhs = (p("1+x^2") * &a[n]).scale(&Rational::from_integer(BigInt::from(2).pow(n as u32)));
            let rhs = int_poly(&pr[n])
                .binomial_substitute(&x(), n as u32 + 1, &p("1+x"), &p("1-x"))
                .map_err(|e| Counterexample::at(n, e.to_string()))?;
            compare_in_x(n, "2^n(1+x^2)A^_n", &lhs, &rhs)
        },
    )
}

/// `B̂_{n+1} = (1+x)B̂_n + (1+x²) Σ_{k<n} C(n,k) 2^(n-k) B̂_k Â_{n-k}`.
pub fn verify_convolution(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    let ns = (*ns.start()).max(1)..=*ns.end();
    ranged(
        "thm.convolution",
        ns,
        |hi| Ok((alt_b_polys(fam, hi + 1)?, alt_a_polys(fam, hi)?)),
        |(b, a), n| {
            let sum: Poly = (0..n)
                .map(|k| {
                    let c = binomial(n, k) * BigInt::from(2).pow((n - k) as u32);
                    (&b[k] * &a[n - k]).scale(&Rational::from_integer(c))
                })
                .sum();
            let rhs = p("1+x") * &b[n] + p("1+x^2") * sum;
            compare_in_x(n + 1, "B^_{n+1}", &b[n + 1], &rhs)
        },
    )
}

fn compare_gamma(n: usize, what: &str, got: &GammaExpansion, want: &Poly) -> Result<(), Counterexample> {
    let mut w = want.coeffs_in(&x()).expect("row in x");
    w.resize(got.coeffs.len().max(w.len()), Rational::zero());
    let mut g = got.coeffs.clone();
    g.resize(w.len(), Rational::zero());
    match (0..w.len()).find(|&k| g[k] != w[k]) {
        None => Ok(()),
        Some(k) => Err(Counterexample::at(n, format!("{what}: expected {} got {}", w[k], g[k])).with_index(k)),
    }
}

/// `Â_n = Σ_k η_{n,k} (-2x)^k (1+x)^(n-1-2k)` with `η_n(x) = S_{n-1}(x+1)`.
pub fn verify_gamma_a(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    let ns = (*ns.start()).max(1)..=*ns.end();
    ranged("gamma.A", ns, |hi| alt_a_polys(fam, hi), |a, n| {
        let g = gamma_extract(&a[n], &rat(-2), n as u32 - 1).map_err(|e| Counterexample::at(n, e.to_string()))?;
        let eta = fam.eta(n).map_err(|e| family_cex(n, e))?;
        compare_gamma(n, "eta", &g, &eta)
    })
}

/// `B̂_n = Σ_i ξ_{n,i} (-4x)^i (1+x)^(n-2i)`, and `D_{G3}^n(e)` at
/// `e = 1, a = 1+x, b = x` equals `B̂_n`.
pub fn verify_gamma_b(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    ranged(
        "gamma.B",
        ns,
        |hi| {
            let g3 = Grammar::builtin(BuiltinGrammar::G3);
            let derived = g3
                .derive_sequence(&Poly::var("e"), hi)
                .map_err(|e| Counterexample::at(0, e.to_string()))?;
            Ok((alt_b_polys(fam, hi)?, xi_polys(fam, hi)?, derived))
        },
        |(b, xi, derived), n| {
            let g = gamma_extract(&b[n], &rat(-4), n as u32).map_err(|e| Counterexample::at(n, e.to_string()))?;
            compare_gamma(n, "xi", &g, &xi[n])?;
            let mut asg = BTreeMap::new();
            asg.insert(Var::new("e"), Poly::one());
            asg.insert(Var::new("a"), p("1+x"));
            asg.insert(Var::new("b"), p("x"));
            let sub = derived[n].substitute(&asg).map_err(|e| Counterexample::at(n, e.to_string()))?;
            compare_in_x(n, "D_G3^n(e)", &b[n], &sub)
        },
    )
}

/// `ξ_n(x-2)` is the `lpk` distribution, `ξ_n(x-1) = Σ (x+1)^lpk`, and
/// `ξ_n(x²-1) = x^n Q_n(1/x)`. The first two need enumeration.
pub fn verify_xi_lpk(fam: &Families, lpk: RangeInclusive<usize>, q: RangeInclusive<usize>) -> VerdictReport {
    const ID: &str = "xi.lpk";
    let lpk = (*lpk.start()).max(1)..=(*lpk.end()).min(fam.cap.unsigned);
    let hi = (*lpk.end()).max(*q.end());
    let lo = (*lpk.start()).min(*q.start());
    if lpk.is_empty() && q.is_empty() {
        return VerdictReport::pass(ID, None).with_note("empty range");
    }
    let note = if lpk.is_empty() {
        "lpk routes skipped".to_string()
    } else {
        format!("lpk routes n={}..{}", lpk.start(), lpk.end())
    };
    let report = ranged(
        ID,
        lo..=hi,
        |hi| Ok((xi_polys(fam, hi)?, fam.q_rows(hi))),
        |(xi, qr), n| {
            if lpk.contains(&n) {
                let dist = fam.left_peak_m(n, PeakSource::Enumeration).map_err(|e| family_cex(n, e))?;
                let shifted = shift_x(&xi[n], -2).expect("row in x");
                compare_in_x(n, "xi_n(x-2)", &dist, &shifted)?;
                let lhs = shift_x(&xi[n], -1).expect("row in x");
                let rhs = shift_x(&dist, 1).expect("row in x");
                compare_in_x(n, "xi_n(x-1)", &rhs, &lhs)?;
            }
            if q.contains(&n) {
                let mut asg = BTreeMap::new();
                asg.insert(x(), p("x^2-1"));
                let lhs = xi[n].substitute(&asg).expect("row in x");
                let rev = int_poly(&qr[n]).reversal(&x(), n as u32).map_err(|e| Counterexample::at(n, e.to_string()))?;
                compare_in_x(n, "xi_n(x^2-1)", &rev, &lhs)?;
            }
            Ok(())
        },
    );
    report.with_note(note)
}

/// `A_{n+1} = Σ_i 2^i S(n,i) x^i (1+x)^(n-2i)` against brute-force `des`.
pub fn verify_simsun_gamma_a(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    let ns = *ns.start()..=(*ns.end()).min(fam.cap.unsigned.saturating_sub(1));
    ranged("simsun.gamma_A", ns, |hi| Ok(fam.simsun_rows(hi)), |s, n| {
        let a = fam.euler_a(n + 1, Provenance::Enumeration).map_err(|e| family_cex(n, e))?;
        compare_in_x(n, "A_{n+1}", &a, &assemble_gamma(&int_poly(&s[n]), 2, n))
    })
}

/// Boundary values: `B̂(n,0) = B̂(n,n) = ξ_{n,0} = s_n`, `ξ_{2m,m} =
/// ξ_{2m-1,m-1} = E_{2m}`, and `ξ_n(-1) = n!`. `s_n` and `E_{2m}` come from
/// their generating functions and, inside the cap, from counting snakes and
/// alternating permutations.
pub fn verify_boundary(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    ranged(
        "boundary",
        ns,
        |hi| {
            let s = egfseries::springer_numbers(hi).map_err(|e| Counterexample::at(0, e.to_string()))?;
            let e = egfseries::secant_numbers(hi).map_err(|e| Counterexample::at(0, e.to_string()))?;
            let b = fam.alt_b_rows(hi).map_err(|e| family_cex(0, e))?;
            let xi = fam.xi_rows(hi).map_err(|e| family_cex(0, e))?;
            Ok((s, e, b, xi))
        },
        |(s, e, b, xi), n| {
            let eq = |what: &str, want: &BigInt, got: &BigInt| {
                if want == got {
                    Ok(())
                } else {
                    Err(Counterexample::at(n, format!("{what}: expected {want} got {got}")))
                }
            };
            let entry = |row: &[BigInt], k: usize| row.get(k).cloned().unwrap_or_default();
            eq("B^(n,0)", &s[n], &entry(&b[n], 0))?;
            eq("B^(n,n)", &s[n], &entry(&b[n], n))?;
            eq("xi_{n,0}", &s[n], &entry(&xi[n], 0))?;
            if n <= fam.cap.signed {
                let snakes = permstats::count(Predicate::Snake, n, &fam.cap).map_err(|e| Counterexample::at(n, e.to_string()))?;
                eq("snakes", &s[n], &snakes.into())?;
            }
            if n % 2 == 0 {
                let m = n / 2;
                eq("xi_{2m,m}", &e[n], &entry(&xi[n], m))?;
                if m >= 1 {
                    eq("xi_{2m-1,m-1}", &e[n], &entry(&xi[n - 1], m - 1))?;
                }
                if n <= fam.cap.unsigned {
                    let alt = permstats::count(Predicate::Alternating, n, &fam.cap)
                        .map_err(|e| Counterexample::at(n, e.to_string()))?;
                    eq("alternating", &e[n], &alt.into())?;
                }
            }
            let at_minus_one = int_poly(&xi[n]).eval_at(&x(), &rat(-1)).expect("row in x");
            eq("xi_n(-1)", &factorial(n), &at_minus_one.to_integer())
        },
    )
}

/// `B̂_n` is palindromic for every `n` and unimodal from `n = 3` on.
pub fn verify_palindromic_unimodal(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    ranged("struct.altB_palindromic_unimodal", ns, |hi| alt_b_polys(fam, hi), |b, n| {
        let fail = |what: &str| Err(Counterexample::at(n, format!("B^_n = {} is not {what}", b[n])));
        if !b[n].is_palindromic(&x(), n as u32).unwrap_or(false) {
            return fail("palindromic");
        }
        if n >= 3 && !b[n].is_unimodal(&x()).unwrap_or(false) {
            return fail("unimodal");
        }
        Ok(())
    })
}

/// Complemented insertion is a bijection `S^B_{n-1} × [2n] → S^B_n`.
pub fn verify_insertion(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    let ns = (*ns.start()).max(1)..=(*ns.end()).min(fam.cap.signed);
    ranged("struct.insertion", ns, |_| Ok(()), |_, n| {
        match permstats::insertion_bijection_check(n, &fam.cap) {
            Ok(true) => Ok(()),
            Ok(false) => Err(Counterexample::at(n, "insertion is not a bijection")),
            Err(e) => Err(Counterexample::at(n, e.to_string())),
        }
    })
}

/// `altdes_B + altasc_B = n` on every signed permutation.
pub fn verify_altdes_altasc(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    let ns = *ns.start()..=(*ns.end()).min(fam.cap.signed);
    ranged("struct.altdes_altasc", ns, |_| Ok(()), |_, n| {
        match permstats::signed_perms(n).find(|s| s.altdes_b() + s.altasc_b() != n) {
            None => Ok(()),
            Some(s) => Err(Counterexample::at(n, format!("{:?}: altdesB + altascB != n", s.word()))),
        }
    })
}

/// Brute-force distribution of a statistic against a recurrence row.
fn verify_oracle(fam: &Families, id: &str, stat: Statistic, ns: RangeInclusive<usize>) -> VerdictReport {
    let cap = fam.cap.for_group(stat.group());
    let lo = if stat == Statistic::Altdes { (*ns.start()).max(1) } else { *ns.start() };
    let ns = lo..=(*ns.end()).min(cap);
    let rows = |hi| match stat {
        Statistic::Altdes => alt_a_polys(fam, hi),
        _ => alt_b_polys(fam, hi),
    };
    ranged(id, ns, rows, |rows, n| {
        let dist = permstats::distribution_with(stat, n, &fam.cap, fam.mode).map_err(|e| Counterexample::at(n, e.to_string()))?;
        compare_in_x(n, stat.name(), &rows[n], &dist)
    })
}

pub fn verify_oracle_alt_a(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    verify_oracle(fam, "oracle.altA", Statistic::Altdes, ns)
}

pub fn verify_oracle_alt_b(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    verify_oracle(fam, "oracle.altB", Statistic::AltdesB, ns)
}

fn grammar_rows(
    id: &str,
    which: BuiltinGrammar,
    ns: RangeInclusive<usize>,
    load: impl FnOnce(usize) -> Result<Vec<Poly>, Counterexample>,
    offset: usize,
) -> VerdictReport {
    let g = Grammar::builtin(which);
    let (e, xv, yv) = (Var::new("e"), x(), Var::new("y"));
    ranged(
        id,
        ns,
        |hi| {
            let derived = g
                .derive_sequence(&Poly::var("e"), hi)
                .map_err(|err| Counterexample::at(0, err.to_string()))?;
            Ok((load(hi + offset)?, derived))
        },
        |(rows, derived), n| {
            let row = grammar::extract_row(&derived[n], &e, (&xv, &yv), n).map_err(|err| Counterexample::at(n, err.to_string()))?;
            compare_in_x(n, "row", &rows[n + offset], &Poly::from_coeffs(&x(), row))?;
            if which == BuiltinGrammar::G2 && !grammar::is_xy_symmetric(&derived[n]) {
                return Err(Counterexample::at(n, "D^n(e) is not symmetric in x and y"));
            }
            Ok(())
        },
    )
}

/// `D_{G1}^n(e) = e Σ_k Â(n+1,k) x^k y^(n-k)`.
pub fn verify_grammar_g1(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    grammar_rows("grammar.g1_altA", BuiltinGrammar::G1, ns, |hi| alt_a_polys(fam, hi), 1)
}

/// `D_{G2}^n(e) = e Σ_k B̂(n,k) x^k y^(n-k)`, symmetric in `x` and `y`.
pub fn verify_grammar_g2(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    grammar_rows("grammar.g2_altB", BuiltinGrammar::G2, ns, |hi| alt_b_polys(fam, hi), 0)
}

/// Eulerian rows of both types from their grammars against brute force.
pub fn verify_grammar_eulerian(fam: &Families, ns: RangeInclusive<usize>) -> VerdictReport {
    let ns = (*ns.start()).max(1)..=(*ns.end()).min(fam.cap.signed);
    ranged("grammar.eulerian", ns, |_| Ok(()), |_, n| {
        let get = |r: Result<Poly, FamilyError>| r.map_err(|e| family_cex(n, e));
        let a = get(fam.euler_a(n, Provenance::Enumeration))?;
        compare_in_x(n, "dumont", &a, &get(fam.euler_a(n, Provenance::Grammar))?)?;
        let b = get(fam.euler_b(n, Provenance::Enumeration))?;
        compare_in_x(n, "typeB", &b, &get(fam.euler_b(n, Provenance::Grammar))?)
    })
}

/// What `run_suite` runs and how far.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub max_n: usize,
    pub order: usize,
    pub cap: EnumCap,
    pub mode: ExecMode,
    pub fault: Option<Fault>,
    /// Exact id, or the group before the first `.`; `None` runs everything.
    pub select: Option<String>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: 12,
            order: egfseries::DEFAULT_ORDER,
            cap: EnumCap::default(),
            mode: ExecMode::default(),
            fault: None,
            select: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown identity `{0}`; known: {1}")]
    UnknownIdentity(String, String),
}

type Check = fn(&Families, usize, usize) -> VerdictReport;

/// Every check in report order, with its id.
pub const SUITE: &[(&str, Check)] = &[
    ("oracle.altA", |f, n, _| verify_oracle_alt_a(f, 0..=n)),
    ("oracle.altB", |f, n, _| verify_oracle_alt_b(f, 0..=n)),
    ("grammar.g1_altA", |f, n, _| verify_grammar_g1(f, 0..=n)),
    ("grammar.g2_altB", |f, n, _| verify_grammar_g2(f, 0..=n)),
    ("grammar.eulerian", |f, n, _| verify_grammar_eulerian(f, 0..=n)),
    ("grammar.g3_change_of_variables", |_, n, _| grammar::change_of_variables_check(n)),
    ("egf.altA", |f, _, o| egfseries::verify_egf_alt_a(f, o)),
    ("egf.altB", |f, _, o| egfseries::verify_egf_alt_b(f, o)),
    ("egf.M", |f, _, o| egfseries::verify_egf_m(f, o)),
    ("egf.xi", |f, _, o| egfseries::verify_egf_xi(f, o)),
    ("egf.springer", |f, _, o| egfseries::verify_egf_springer(f, o)),
    ("egf.secant", |f, _, o| egfseries::verify_egf_secant(f, o)),
    ("egf.altB_pde", |f, _, o| egfseries::pde_check_alt_b(f, o)),
    ("thm.leftpeak", |f, n, _| verify_thm_leftpeak(f, 0..=n)),
    ("thm.petersen_typeB", |f, n, _| verify_petersen_type_b(f, 0..=n)),
    ("thm.Q_identity", |f, n, _| verify_q_identity(f, 0..=n)),
    ("thm.P_identity", |f, n, _| verify_p_identity(f, 0..=n)),
    ("thm.convolution", |f, n, _| verify_convolution(f, 0..=n)),
    ("gamma.A", |f, n, _| verify_gamma_a(f, 0..=n)),
    ("gamma.B", |f, n, _| verify_gamma_b(f, 0..=n)),
    ("xi.lpk", |f, n, _| verify_xi_lpk(f, 0..=n, 0..=n)),
    ("simsun.gamma_A", |f, n, _| verify_simsun_gamma_a(f, 0..=n)),
    ("boundary", |f, n, _| verify_boundary(f, 0..=n)),
    ("struct.altB_palindromic_unimodal", |f, n, _| verify_palindromic_unimodal(f, 0..=n)),
    ("struct.insertion", |f, n, _| verify_insertion(f, 0..=n)),
    ("struct.altdes_altasc", |f, n, _| verify_altdes_altasc(f, 0..=n)),
];

fn selected(id: &str, select: &str) -> bool {
    select == "all" || id == select || id.split('.').next() == Some(select)
}

/// Run the selected checks. Reports come back in `SUITE` order whatever the
/// execution mode.
pub fn run_suite(opts: &SuiteOptions) -> Result<Vec<VerdictReport>, SuiteError> {
    let mut fam = Families { cap: opts.cap, mode: opts.mode, ..Families::default() };
    if let Some(fault) = opts.fault {
        fam = fam.with_fault(fault);
    }
    let chosen: Vec<&(&str, Check)> = SUITE
        .iter()
        .filter(|(id, _)| opts.select.as_deref().is_none_or(|s| selected(id, s)))
        .collect();
    if chosen.is_empty() {
        let known: Vec<&str> = SUITE.iter().map(|(id, _)| *id).collect();
        return Err(SuiteError::UnknownIdentity(
            opts.select.clone().unwrap_or_default(),
            known.join(", "),
        ));
    }
    let (max_n, order) = (opts.max_n, opts.order);
    Ok(par::map_collect(opts.mode, chosen, |(_, check)| check(&fam, max_n, order)))
}
