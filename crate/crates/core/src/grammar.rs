//! Context-free grammars and their formal derivative.
//!
//! A grammar maps each letter of an alphabet to a polynomial. The formal
//! derivative `D_G` sends a letter to its rule and extends to all
//! polynomials as a derivation (linear plus Leibniz).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::exactpoly::{rat, Monomial, ParseError, Poly, Rational, Var};
use crate::par::{self, ExecMode};
use crate::report::{Counterexample, VerdictReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("variable `{0}` is not in the grammar alphabet")]
    UnknownVariable(Var),
    #[error("alphabet letter `{0}` has no rule")]
    MissingRule(Var),
    #[error("unknown grammar `{0}`")]
    UnknownGrammar(String),
    #[error("malformed rule `{0}`: expected `letter->expression`")]
    MalformedRule(String),
    #[error("in rule for `{letter}`: {source}")]
    Parse { letter: String, source: ParseError },
    #[error("term {term} does not fit the expected shape ({expected})")]
    Shape { term: String, expected: String },
}

/// The grammars used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinGrammar {
    /// `x -> xy, y -> xy`; Eulerian numbers of type A.
    Dumont,
    /// `x -> xy^2, y -> x^2y`; Eulerian numbers of type B.
    TypeB,
    /// `e -> e(x+y), x -> (x^2+y^2)/2, y -> (x^2+y^2)/2`; alternating Eulerian, type A.
    G1,
    /// `e -> e(x+y), x -> x^2+y^2, y -> x^2+y^2`; alternating Eulerian, type B.
    G2,
    /// `e -> ea, a -> 2a^2-4b, b -> a^3-2ab`; G2 rewritten in `a = x+y`, `b = xy`.
    G3,
}

impl BuiltinGrammar {
    pub const ALL: [BuiltinGrammar; 5] = [
        BuiltinGrammar::Dumont,
        BuiltinGrammar::TypeB,
        BuiltinGrammar::G1,
        BuiltinGrammar::G2,
        BuiltinGrammar::G3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinGrammar::Dumont => "dumont",
            BuiltinGrammar::TypeB => "typeB",
            BuiltinGrammar::G1 => "g1",
            BuiltinGrammar::G2 => "g2",
            BuiltinGrammar::G3 => "g3",
        }
    }

    fn literal(self) -> &'static str {
        match self {
            BuiltinGrammar::Dumont => "x->x*y; y->x*y",
            BuiltinGrammar::TypeB => "x->x*y^2; y->x^2*y",
            BuiltinGrammar::G1 => "e->e*(x+y); x->1/2*(x^2+y^2); y->1/2*(x^2+y^2)",
            BuiltinGrammar::G2 => "e->e*(x+y); x->x^2+y^2; y->x^2+y^2",
            BuiltinGrammar::G3 => "e->e*a; a->2*a^2-4*b; b->a^3-2*a*b",
        }
    }
}

impl FromStr for BuiltinGrammar {
    type Err = GrammarError;
    fn from_str(s: &str) -> Result<Self, GrammarError> {
        BuiltinGrammar::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| GrammarError::UnknownGrammar(s.to_string()))
    }
}

/// An alphabet with one substitution rule per letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammar {
    alphabet: Vec<Var>,
    rules: BTreeMap<Var, Poly>,
}

impl Grammar {
    pub fn new(alphabet: Vec<Var>, rules: BTreeMap<Var, Poly>) -> Result<Self, GrammarError> {
        for v in &alphabet {
            if !rules.contains_key(v) {
                return Err(GrammarError::MissingRule(v.clone()));
            }
        }
        for (lhs, rhs) in &rules {
            if !alphabet.contains(lhs) {
                return Err(GrammarError::UnknownVariable(lhs.clone()));
            }
            if let Some(v) = rhs.vars().into_iter().find(|v| !alphabet.contains(v)) {
                return Err(GrammarError::UnknownVariable(v));
            }
        }
        Ok(Grammar { alphabet, rules })
    }

    /// Parse `"e->e*(x+y); x->x^2+y^2; y->x^2+y^2"`. The alphabet is the
    /// list of left-hand sides in order of appearance.
    pub fn parse(literal: &str) -> Result<Self, GrammarError> {
        let mut alphabet = Vec::new();
        let mut rules = BTreeMap::new();
        for rule in literal.split(';').map(str::trim).filter(|r| !r.is_empty()) {
            let (lhs, rhs) = rule
                .split_once("->")
                .ok_or_else(|| GrammarError::MalformedRule(rule.to_string()))?;
            let lhs = lhs.trim();
            let valid_name = lhs.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && lhs.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid_name {
                return Err(GrammarError::MalformedRule(rule.to_string()));
            }
            let rhs = Poly::parse(rhs).map_err(|source| GrammarError::Parse {
                letter: lhs.to_string(),
                source,
            })?;
            let v = Var::new(lhs);
            if rules.insert(v.clone(), rhs).is_some() {
                return Err(GrammarError::MalformedRule(rule.to_string()));
            }
            alphabet.push(v);
        }
        Grammar::new(alphabet, rules)
    }

    pub fn builtin(which: BuiltinGrammar) -> Self {
        Grammar::parse(which.literal()).expect("built-in grammar literal is valid")
    }

    /// A built-in name or a literal.
    pub fn from_name_or_literal(s: &str) -> Result<Self, GrammarError> {
        match s.parse::<BuiltinGrammar>() {
            Ok(g) => Ok(Grammar::builtin(g)),
            Err(_) if s.contains("->") => Grammar::parse(s),
            Err(e) => Err(e),
        }
    }

    pub fn alphabet(&self) -> &[Var] {
        &self.alphabet
    }

    pub fn rule(&self, v: &Var) -> Option<&Poly> {
        self.rules.get(v)
    }

    pub fn rules(&self) -> &BTreeMap<Var, Poly> {
        &self.rules
    }

    fn derive_term(&self, m: &Monomial, c: &Rational) -> Result<Poly, GrammarError> {
        let mut out = Poly::zero();
        for (v, _) in m.iter() {
            let rule = self
                .rules
                .get(v)
                .ok_or_else(|| GrammarError::UnknownVariable(v.clone()))?;
            let (e, rest) = m.lower(v).expect("variable occurs in monomial");
            out += rule.mul_monomial(&rest, &(c * rat(i64::from(e))));
        }
        Ok(out)
    }

    /// One application of `D_G`.
    pub fn derive(&self, p: &Poly) -> Result<Poly, GrammarError> {
        let mode = if p.num_terms() >= 64 {
            ExecMode::default()
        } else {
            ExecMode::Sequential
        };
        self.derive_with(p, mode)
    }

    /// One application of `D_G`, splitting the term-wise Leibniz expansion
    /// across threads in parallel mode. The sum is exact, so the result does
    /// not depend on the mode.
    pub fn derive_with(&self, p: &Poly, mode: ExecMode) -> Result<Poly, GrammarError> {
        let terms: Vec<(&Monomial, &Rational)> = p.terms().collect();
        let parts = par::map_collect(mode, terms, |(m, c)| self.derive_term(m, c));
        let mut out = Poly::zero();
        for part in parts {
            out += part?;
        }
        Ok(out)
    }

    /// `D_G^n(seed)`; `n = 0` returns the seed.
    pub fn derive_iter(&self, seed: &Poly, n: usize) -> Result<Poly, GrammarError> {
        let mut cur = seed.clone();
        for v in seed.vars() {
            if !self.rules.contains_key(&v) {
                return Err(GrammarError::UnknownVariable(v));
            }
        }
        for _ in 0..n {
            cur = self.derive(&cur)?;
        }
        Ok(cur)
    }

    /// `[seed, D(seed), D^2(seed), ...]` up to `D^n(seed)`.
    pub fn derive_sequence(&self, seed: &Poly, n: usize) -> Result<Vec<Poly>, GrammarError> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(seed.clone());
        for i in 0..n {
            let next = self.derive(&out[i])?;
            out.push(next);
        }
        Ok(out)
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.alphabet.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}->{}", self.rules[v])?;
        }
        Ok(())
    }
}

/// Read coefficients along a family of monomials: `shape(k)` for
/// `k = 0..len`. Fails if `p` has any term outside that family.
pub fn extract_by<F>(p: &Poly, len: usize, shape: F, expected: &str) -> Result<Vec<Rational>, GrammarError>
where
    F: Fn(usize) -> Monomial,
{
    let monos: Vec<Monomial> = (0..len).map(&shape).collect();
    for (m, c) in p.terms() {
        if !monos.contains(m) {
            return Err(GrammarError::Shape {
                term: Poly::term(m.clone(), c.clone()).to_string(),
                expected: expected.to_string(),
            });
        }
    }
    Ok(monos.iter().map(|m| p.coefficient(m)).collect())
}

/// For `p = marker * Σ_k c_k u^k v^(n-k)` return `[c_0, ..., c_n]`.
/// The marker may coincide with `u` or `v`.
pub fn extract_row(
    p: &Poly,
    marker: &Var,
    vars: (&Var, &Var),
    n: usize,
) -> Result<Vec<Rational>, GrammarError> {
    let (u, v) = vars;
    let expected = format!("{marker}*{u}^k*{v}^({n}-k)");
    extract_by(
        p,
        n + 1,
        |k| {
            Monomial::from_pairs([
                (marker.clone(), 1),
                (u.clone(), k as u32),
                (v.clone(), (n - k) as u32),
            ])
        },
        &expected,
    )
}

/// Row `B(n, k)` from `D^n(xy) = Σ_k B(n,k) x^(2n-2k+1) y^(2k+1)` under the
/// type-B Eulerian grammar.
pub fn extract_type_b_row(p: &Poly, n: usize) -> Result<Vec<Rational>, GrammarError> {
    let (x, y) = (Var::new("x"), Var::new("y"));
    extract_by(
        p,
        n + 1,
        |k| Monomial::from_pairs([(x.clone(), (2 * n - 2 * k + 1) as u32), (y.clone(), (2 * k + 1) as u32)]),
        "x^(2n-2k+1)*y^(2k+1)",
    )
}

fn g3_to_g2_assignment() -> BTreeMap<Var, Poly> {
    let mut asg = BTreeMap::new();
    asg.insert(Var::new("e"), Poly::var("e"));
    asg.insert(Var::new("a"), Poly::var("x") + Poly::var("y"));
    asg.insert(Var::new("b"), Poly::var("x") * Poly::var("y"));
    asg
}

/// Checks that G3 is G2 written in `a = x+y`, `b = xy`: the images of `e`,
/// `a`, `b` under `D_{G2}` match the G3 rules after substitution, and
/// `D_{G3}^n(e)` substituted equals `D_{G2}^n(e)` for `n <= max_n`.
pub fn change_of_variables_check(max_n: usize) -> VerdictReport {
    const ID: &str = "grammar.g3_change_of_variables";
    let g2 = Grammar::builtin(BuiltinGrammar::G2);
    let g3 = Grammar::builtin(BuiltinGrammar::G3);
    let asg = g3_to_g2_assignment();
    let range = Some((0, max_n));

    for letter in ["e", "a", "b"] {
        let v = Var::new(letter);
        let image = asg[&v].clone();
        let lhs = g2.derive(&image).expect("G2 covers e, x, y");
        let rhs = g3.rule(&v).expect("G3 letter").substitute(&asg).expect("G3 rules use e, a, b");
        if lhs != rhs {
            return VerdictReport::fail(
                ID,
                range,
                Counterexample::at(1, format!("D_G2({image}) = {lhs}, G3 rule for {letter} gives {rhs}")),
            );
        }
    }

    let mut in_g2 = Poly::var("e");
    let mut in_g3 = Poly::var("e");
    for n in 0..=max_n {
        if n > 0 {
            in_g2 = g2.derive(&in_g2).expect("G2 derivation");
            in_g3 = g3.derive(&in_g3).expect("G3 derivation");
        }
        let mapped = in_g3.substitute(&asg).expect("G3 output uses e, a, b");
        if mapped != in_g2 {
            let diff = &mapped - &in_g2;
            let (m, _) = diff.terms().next().expect("nonzero difference");
            return VerdictReport::fail(
                ID,
                range,
                Counterexample::at(n, format!("coefficient of {m} differs")),
            );
        }
    }
    VerdictReport::pass(ID, range)
}

/// Whether swapping `x` and `y` fixes `p`.
pub fn is_xy_symmetric(p: &Poly) -> bool {
    p.swap_vars(&Var::new("x"), &Var::new("y")) == *p
}

/// First `keep` entries of `row`, provided the rest are zero.
pub(crate) fn drop_zero_tail(row: Vec<Rational>, keep: usize) -> Option<Vec<Rational>> {
    if row[keep..].iter().all(Zero::is_zero) {
        Some(row[..keep].to_vec())
    } else {
        None
    }
}
