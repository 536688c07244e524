//! Polynomial families generated from recurrences, grammars, enumeration and
//! generating functions, kept apart so they can be checked against each other.

mod recurrence;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use recurrence::{
    DiffRecurrence, Fault, Recurrences, RecurrenceId, TriangleRecurrence, TriangleTerm,
};

use crate::egfseries;
use crate::exactpoly::{Poly, PolyError, Rational, Var};
use crate::grammar::{self, BuiltinGrammar, Grammar, GrammarError};
use crate::par::ExecMode;
use crate::permstats::{self, EnumCap, PermError, Predicate, Statistic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: row {n} entry {k}: {value} is not divisible by the recurrence divisor")]
    Indivisible {
        family: String,
        n: usize,
        k: usize,
        value: BigInt,
    },
    #[error("{family}: the two recurrences disagree at n = {n}, k = {k}: {left} vs {right}")]
    Disagreement {
        family: String,
        n: usize,
        k: usize,
        left: BigInt,
        right: BigInt,
    },
    #[error("{family} is undefined at n = {n}")]
    Domain { family: String, n: usize },
    #[error("{family} has no `{source_name}` route")]
    NoSuchSource { family: String, source_name: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error(transparent)]
    Enumeration(#[from] PermError),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Series(#[from] egfseries::SeriesError),
}

impl FamilyError {
    /// Row index at which generation failed, when known.
    pub fn row(&self) -> Option<usize> {
        match self {
            FamilyError::Indivisible { n, .. }
            | FamilyError::Disagreement { n, .. }
            | FamilyError::Domain { n, .. } => Some(*n),
            _ => None,
        }
    }
}

/// Family identifiers, as used on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    AltA,
    AltB,
    EulerA,
    EulerB,
    P,
    Q,
    S,
    Eta,
    Xi,
    M,
    Springer,
    Secant,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::AltA,
        Family::AltB,
        Family::EulerA,
        Family::EulerB,
        Family::P,
        Family::Q,
        Family::S,
        Family::Eta,
        Family::Xi,
        Family::M,
        Family::Springer,
        Family::Secant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::AltA => "altA",
            Family::AltB => "altB",
            Family::EulerA => "eulerA",
            Family::EulerB => "eulerB",
            Family::P => "P",
            Family::Q => "Q",
            Family::S => "S",
            Family::Eta => "eta",
            Family::Xi => "xi",
            Family::M => "M",
            Family::Springer => "springer",
            Family::Secant => "secant",
        }
    }

    /// Smallest index at which the family is defined.
    pub fn first_index(self) -> usize {
        match self {
            Family::AltA | Family::EulerA | Family::EulerB | Family::Eta | Family::M => 1,
            _ => 0,
        }
    }

    pub fn is_scalar(self) -> bool {
        matches!(self, Family::Springer | Family::Secant)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// Where a row came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Recurrence,
    Grammar,
    Enumeration,
    Egf,
    Identity,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Recurrence => "recurrence",
            Provenance::Grammar => "grammar",
            Provenance::Enumeration => "enumeration",
            Provenance::Egf => "egf",
            Provenance::Identity => "identity",
        })
    }
}

/// Routes for the left peak polynomials `M_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeakSource {
    Enumeration,
    Egf,
    XiShift,
}

/// Routes for the Springer and secant numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarSource {
    /// Springer: constant term of B̂_n. Not available for secant numbers.
    AltB,
    /// Springer: `ξ_{n,0}`; secant: `ξ_{2n,n}`.
    Xi,
    /// Springer: snakes in `S^B_n`; secant: alternating permutations.
    Enumeration,
    Egf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRow {
    pub n: usize,
    pub poly: Poly,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTable {
    pub family: Family,
    pub rows: Vec<FamilyRow>,
}

pub(crate) fn x() -> Var {
    Var::new("x")
}

fn to_poly(row: &[BigInt]) -> Poly {
    Poly::from_int_coeffs(&x(), row)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn first_difference(a: &[BigInt], b: &[BigInt]) -> Option<(usize, BigInt, BigInt)> {
    let len = a.len().max(b.len());
    let get = |v: &[BigInt], k: usize| v.get(k).cloned().unwrap_or_else(BigInt::zero);
    (0..len)
        .find(|&k| get(a, k) != get(b, k))
        .map(|k| (k, get(a, k), get(b, k)))
}

/// Generator for every family, parameterised by its recurrences and the
/// enumeration cap.
#[derive(Debug, Clone, Default)]
pub struct Families {
    pub recurrences: Recurrences,
    pub cap: EnumCap,
    pub mode: ExecMode,
}

impl Families {
    pub fn new(cap: EnumCap) -> Self {
        Families {
            cap,
            ..Families::default()
        }
    }

    pub fn with_fault(&self, fault: Fault) -> Self {
        Families {
            recurrences: self.recurrences.with_fault(fault),
            ..self.clone()
        }
    }

    /// Rows `Â_1 .. Â_max_n` (index 0 of the result is `Â_1`).
    pub fn alt_a_rows(&self, max_n: usize) -> Result<Vec<Vec<BigInt>>, FamilyError> {
        let mut rows = Vec::with_capacity(max_n);
        if max_n == 0 {
            return Ok(rows);
        }
        rows.push(vec![BigInt::one()]);
        for n in 1..max_n {
            let next = self
                .recurrences
                .alt_a
                .step(n, &rows[n - 1], n + 1)
                .map_err(|e| FamilyError::Indivisible {
                    family: "altA".into(),
                    n: n + 1,
                    k: e.k,
                    value: e.value,
                })?;
            rows.push(next);
        }
        Ok(rows)
    }

    pub fn alt_a(&self, n: usize) -> Result<Poly, FamilyError> {
        if n == 0 {
            return Err(FamilyError::Domain { family: "altA".into(), n });
        }
        Ok(to_poly(&self.alt_a_rows(n)?[n - 1]))
    }

    /// Rows `B̂_0 .. B̂_max_n`, from the triangle recurrence and cross-checked
    /// against the differential one at every row.
    pub fn alt_b_rows(&self, max_n: usize) -> Result<Vec<Vec<BigInt>>, FamilyError> {
        let mut tri = vec![vec![BigInt::one()]];
        let mut diff = vec![BigInt::one()];
        for n in 0..max_n {
            let next = self
                .recurrences
                .alt_b
                .step(n, &tri[n], n + 2)
                .map_err(|e| FamilyError::Indivisible {
                    family: "altB".into(),
                    n: n + 1,
                    k: e.k,
                    value: e.value,
                })?;
            diff = self.recurrences.alt_b_diff.step(n, &diff);
            if let Some((k, left, right)) = first_difference(&next, &diff) {
                return Err(FamilyError::Disagreement {
                    family: "altB".into(),
                    n: n + 1,
                    k,
                    left,
                    right,
                });
            }
            tri.push(next);
        }
        Ok(tri)
    }

    pub fn alt_b(&self, n: usize) -> Result<Poly, FamilyError> {
        Ok(to_poly(&self.alt_b_rows(n)?[n]))
    }

    /// Rows `ξ_0 .. ξ_max_n`, triangle and polynomial recurrences in lockstep.
    pub fn xi_rows(&self, max_n: usize) -> Result<Vec<Vec<BigInt>>, FamilyError> {
        let mut tri = vec![vec![BigInt::one()]];
        let mut diff = vec![BigInt::one()];
        for n in 0..max_n {
            let next = self
                .recurrences
                .xi
                .step(n, &tri[n], n.div_ceil(2) + 1)
                .map_err(|e| FamilyError::Indivisible {
                    family: "xi".into(),
                    n: n + 1,
                    k: e.k,
                    value: e.value,
                })?;
            diff = self.recurrences.xi_diff.step(n, &diff);
            if let Some((k, left, right)) = first_difference(&next, &diff) {
                return Err(FamilyError::Disagreement {
                    family: "xi".into(),
                    n: n + 1,
                    k,
                    left,
                    right,
                });
            }
            tri.push(next);
        }
        Ok(tri)
    }

    pub fn xi(&self, n: usize) -> Result<Poly, FamilyError> {
        Ok(to_poly(&self.xi_rows(n)?[n]))
    }

    fn diff_rows(rec: &DiffRecurrence, seed: Vec<BigInt>, from: usize, count: usize) -> Vec<Vec<BigInt>> {
        let mut rows = vec![seed];
        for i in 0..count {
            let next = rec.step(from + i, &rows[i]);
            rows.push(next);
        }
        rows
    }

    /// Rows `P_0 .. P_max_n` with `P_0 = x`.
    pub fn p_rows(&self, max_n: usize) -> Vec<Vec<BigInt>> {
        Self::diff_rows(&self.recurrences.p, vec![BigInt::zero(), BigInt::one()], 0, max_n)
    }

    /// Rows `Q_0 .. Q_max_n` with `Q_0 = 1`.
    pub fn q_rows(&self, max_n: usize) -> Vec<Vec<BigInt>> {
        Self::diff_rows(&self.recurrences.q, vec![BigInt::one()], 0, max_n)
    }

    pub fn deriv_p(&self, n: usize) -> Poly {
        to_poly(&self.p_rows(n)[n])
    }

    pub fn deriv_q(&self, n: usize) -> Poly {
        to_poly(&self.q_rows(n)[n])
    }

    /// `Q_{n+1} = Σ_k C(n,k) P_k Q_{n-k}` against the chain-rule recurrence.
    pub fn q_convolution_check(&self, n: usize) -> bool {
        let p = self.p_rows(n);
        let q = self.q_rows(n + 1);
        let conv: Poly = (0..=n)
            .map(|k| (to_poly(&p[k]) * to_poly(&q[n - k])).scale(&Rational::from_integer(binomial(n, k))))
            .sum();
        conv == to_poly(&q[n + 1])
    }

    /// Rows `S_0 .. S_max_n`; `S_0 = S_1 = 1` and the recurrence runs from `n = 1`.
    pub fn simsun_rows(&self, max_n: usize) -> Vec<Vec<BigInt>> {
        let mut rows = vec![vec![BigInt::one()]];
        if max_n >= 1 {
            rows.extend(Self::diff_rows(&self.recurrences.s, vec![BigInt::one()], 1, max_n - 1));
        }
        rows
    }

    pub fn simsun_s(&self, n: usize) -> Poly {
        to_poly(&self.simsun_rows(n)[n])
    }

    /// `η_n(x) = S_{n-1}(x+1)`.
    pub fn eta(&self, n: usize) -> Result<Poly, FamilyError> {
        if n == 0 {
            return Err(FamilyError::Domain { family: "eta".into(), n });
        }
        let s = self.simsun_s(n - 1);
        Ok(shift_x(&s, 1)?)
    }

    pub fn left_peak_m(&self, n: usize, source: PeakSource) -> Result<Poly, FamilyError> {
        if n == 0 {
            return Err(FamilyError::Domain { family: "M".into(), n });
        }
        match source {
            PeakSource::Enumeration => Ok(permstats::distribution_with(Statistic::Lpk, n, &self.cap, self.mode)?),
            PeakSource::Egf => Ok(egfseries::left_peak_rows(n)?.swap_remove(n)),
            PeakSource::XiShift => Ok(shift_x(&self.xi(n)?, -2)?),
        }
    }

    /// Enumeration inside the cap, `ξ_n(x-2)` beyond it.
    pub fn left_peak_m_default(&self, n: usize) -> Result<(Poly, Provenance), FamilyError> {
        if n <= self.cap.unsigned {
            Ok((self.left_peak_m(n, PeakSource::Enumeration)?, Provenance::Enumeration))
        } else {
            Ok((self.left_peak_m(n, PeakSource::XiShift)?, Provenance::Identity))
        }
    }

    pub fn euler_a(&self, n: usize, provenance: Provenance) -> Result<Poly, FamilyError> {
        if n == 0 {
            return Err(FamilyError::Domain { family: "eulerA".into(), n });
        }
        match provenance {
            Provenance::Enumeration => Ok(permstats::distribution_with(Statistic::Des, n, &self.cap, self.mode)?),
            Provenance::Grammar => {
                let g = Grammar::builtin(BuiltinGrammar::Dumont);
                let (xv, yv) = (x(), Var::new("y"));
                let d = g.derive_iter(&Poly::var("x"), n)?;
                let row = grammar::extract_row(&d, &xv, (&xv, &yv), n)?;
                let row = grammar::drop_zero_tail(row, n).ok_or_else(|| GrammarError::Shape {
                    term: format!("x^{}", n + 1),
                    expected: "no x^(n+1) term in D^n(x)".into(),
                })?;
                Ok(Poly::from_coeffs(&x(), row))
            }
            other => Err(FamilyError::NoSuchSource {
                family: "eulerA".into(),
                source_name: other.to_string(),
            }),
        }
    }

    pub fn euler_b(&self, n: usize, provenance: Provenance) -> Result<Poly, FamilyError> {
        match provenance {
            Provenance::Enumeration => Ok(permstats::distribution_with(Statistic::DesB, n, &self.cap, self.mode)?),
            Provenance::Grammar if n >= 1 => {
                let g = Grammar::builtin(BuiltinGrammar::TypeB);
                let d = g.derive_iter(&Poly::parse("x*y").expect("literal"), n)?;
                Ok(Poly::from_coeffs(&x(), grammar::extract_type_b_row(&d, n)?))
            }
            Provenance::Grammar => Err(FamilyError::Domain { family: "eulerB".into(), n }),
            other => Err(FamilyError::NoSuchSource {
                family: "eulerB".into(),
                source_name: other.to_string(),
            }),
        }
    }

    /// The Springer number `s_n`.
    pub fn springer(&self, n: usize, source: ScalarSource) -> Result<BigInt, FamilyError> {
        match source {
            ScalarSource::AltB => Ok(self.alt_b_rows(n)?[n][0].clone()),
            ScalarSource::Xi => Ok(self.xi_rows(n)?[n][0].clone()),
            ScalarSource::Enumeration => Ok(permstats::count(Predicate::Snake, n, &self.cap)?.into()),
            ScalarSource::Egf => Ok(egfseries::springer_numbers(n)?.swap_remove(n)),
        }
    }

    /// The secant number `E_n` for even `n`.
    pub fn secant(&self, n: usize, source: ScalarSource) -> Result<BigInt, FamilyError> {
        if n % 2 == 1 {
            return Err(FamilyError::Domain { family: "secant".into(), n });
        }
        match source {
            ScalarSource::Xi => Ok(self.xi_rows(n)?[n][n / 2].clone()),
            ScalarSource::Enumeration => Ok(permstats::count(Predicate::Alternating, n, &self.cap)?.into()),
            ScalarSource::Egf => Ok(egfseries::secant_numbers(n)?.swap_remove(n)),
            ScalarSource::AltB => Err(FamilyError::NoSuchSource {
                family: "secant".into(),
                source_name: "altB".into(),
            }),
        }
    }

    /// One row of a family through its primary route.
    pub fn row(&self, family: Family, n: usize) -> Result<FamilyRow, FamilyError> {
        let rec = |poly| FamilyRow { n, poly, provenance: Provenance::Recurrence };
        Ok(match family {
            Family::AltA => rec(self.alt_a(n)?),
            Family::AltB => rec(self.alt_b(n)?),
            Family::P => rec(self.deriv_p(n)),
            Family::Q => rec(self.deriv_q(n)),
            Family::S => rec(self.simsun_s(n)),
            Family::Xi => rec(self.xi(n)?),
            Family::Eta => FamilyRow { n, poly: self.eta(n)?, provenance: Provenance::Identity },
            Family::EulerA => {
                let provenance = if n <= self.cap.unsigned { Provenance::Enumeration } else { Provenance::Grammar };
                FamilyRow { n, poly: self.euler_a(n, provenance)?, provenance }
            }
            Family::EulerB => {
                let provenance = if n <= self.cap.signed { Provenance::Enumeration } else { Provenance::Grammar };
                FamilyRow { n, poly: self.euler_b(n, provenance)?, provenance }
            }
            Family::M => {
                let (poly, provenance) = self.left_peak_m_default(n)?;
                FamilyRow { n, poly, provenance }
            }
            Family::Springer => rec(Poly::constant(Rational::from_integer(self.springer(n, ScalarSource::AltB)?))),
            Family::Secant => FamilyRow {
                n,
                poly: Poly::constant(Rational::from_integer(self.secant(2 * n, ScalarSource::Xi)?)),
                provenance: Provenance::Recurrence,
            },
        })
    }

    /// Rows `from..=to`. For `secant`, row `n` holds `E_{2n}`.
    pub fn table(&self, family: Family, from: usize, to: usize) -> Result<FamilyTable, FamilyError> {
        let from = from.max(family.first_index());
        let rows = (from..=to).map(|n| self.row(family, n)).collect::<Result<_, _>>()?;
        Ok(FamilyTable { family, rows })
    }
}

/// `f(x + c)`.
pub fn shift_x(f: &Poly, c: i64) -> Result<Poly, PolyError> {
    let mut asg = std::collections::BTreeMap::new();
    asg.insert(x(), Poly::var("x") + Poly::int(c));
    f.substitute(&asg)
}

/// Integer coefficient vector of a polynomial in `x`.
pub fn int_row(p: &Poly) -> Result<Vec<BigInt>, PolyError> {
    p.int_coeffs_in(&x())
}

// Free-function shorthands over the default generator.

pub fn alt_a(n: usize) -> Result<Poly, FamilyError> {
    Families::default().alt_a(n)
}

pub fn alt_b(n: usize) -> Result<Poly, FamilyError> {
    Families::default().alt_b(n)
}

pub fn xi(n: usize) -> Result<Poly, FamilyError> {
    Families::default().xi(n)
}

pub fn deriv_p(n: usize) -> Poly {
    Families::default().deriv_p(n)
}

pub fn deriv_q(n: usize) -> Poly {
    Families::default().deriv_q(n)
}

pub fn simsun_s(n: usize) -> Poly {
    Families::default().simsun_s(n)
}

pub fn eta(n: usize) -> Result<Poly, FamilyError> {
    Families::default().eta(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn alternating_type_a_rows() {
        assert_eq!(alt_a(1).unwrap(), p("1"));
        assert_eq!(alt_a(2).unwrap(), p("1+x"));
        assert_eq!(alt_a(3).unwrap(), p("2+2x+2x^2"));
        assert_eq!(alt_a(4).unwrap(), p("5+7x+7x^2+5x^3"));
        assert_eq!(alt_a(5).unwrap(), p("16+26x+36x^2+26x^3+16x^4"));
        assert!(alt_a(0).is_err());
    }

    #[test]
    fn alternating_type_b_rows() {
        assert_eq!(alt_b(0).unwrap(), p("1"));
        assert_eq!(alt_b(1).unwrap(), p("1+x"));
        assert_eq!(alt_b(2).unwrap(), p("3+2x+3x^2"));
        assert_eq!(alt_b(3).unwrap(), p("11+13x+13x^2+11x^3"));
        assert_eq!(alt_b(4).unwrap(), p("57+76x+118x^2+76x^3+57x^4"));
    }

    #[test]
    fn disagreeing_recurrences_are_a_hard_error() {
        let f = Families::default().with_fault(Fault {
            target: RecurrenceId::AltB,
            slot: 0,
            delta: 1,
        });
        match f.alt_b(5) {
            Err(FamilyError::Disagreement { n, .. }) => assert!(n >= 1),
            other => panic!("expected disagreement, got {other:?}"),
        }
    }

    #[test]
    fn xi_rows_match_table() {
        let want = ["1", "1", "3+x", "11+5x", "57+38x+5x^2", "361+302x+61x^2"];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(xi(n).unwrap(), p(w), "n = {n}");
        }
    }

    #[test]
    fn derivative_polynomials() {
        assert_eq!(deriv_p(0), p("x"));
        assert_eq!(deriv_p(1), p("1+x^2"));
        assert_eq!(deriv_p(2), p("2x+2x^3"));
        assert_eq!(deriv_q(1), p("x"));
        assert_eq!(deriv_q(2), p("1+2x^2"));
        let f = Families::default();
        for n in 0..=20 {
            assert!(f.q_convolution_check(n), "n = {n}");
        }
    }

    #[test]
    fn simsun_and_eta() {
        assert_eq!(simsun_s(0), p("1"));
        assert_eq!(simsun_s(1), p("1"));
        assert_eq!(simsun_s(2), p("1+x"));
        assert_eq!(simsun_s(3), p("1+4x"));
        assert_eq!(eta(2).unwrap(), p("1"));
        assert_eq!(eta(3).unwrap(), p("2+x"));
    }

    #[test]
    fn left_peak_routes_agree() {
        let f = Families::default();
        assert_eq!(f.left_peak_m(1, PeakSource::Enumeration).unwrap(), p("1"));
        assert_eq!(f.left_peak_m(2, PeakSource::Enumeration).unwrap(), p("1+x"));
        for n in 1..=7 {
            let e = f.left_peak_m(n, PeakSource::Enumeration).unwrap();
            assert_eq!(f.left_peak_m(n, PeakSource::Egf).unwrap(), e, "egf n = {n}");
            assert_eq!(f.left_peak_m(n, PeakSource::XiShift).unwrap(), e, "xi n = {n}");
        }
    }

    #[test]
    fn eulerian_rows() {
        let f = Families::default();
        assert_eq!(f.euler_a(1, Provenance::Enumeration).unwrap(), p("1"));
        assert_eq!(f.euler_a(3, Provenance::Enumeration).unwrap(), p("1+4x+x^2"));
        assert_eq!(f.euler_a(3, Provenance::Grammar).unwrap(), p("1+4x+x^2"));
        assert_eq!(f.euler_b(2, Provenance::Enumeration).unwrap(), p("1+6x+x^2"));
        assert_eq!(f.euler_b(2, Provenance::Grammar).unwrap(), p("1+6x+x^2"));
        assert!(f.euler_a(3, Provenance::Egf).is_err());
    }

    #[test]
    fn scalars() {
        let f = Families::default();
        assert_eq!(f.springer(4, ScalarSource::AltB).unwrap(), BigInt::from(57));
        assert_eq!(f.springer(5, ScalarSource::Xi).unwrap(), BigInt::from(361));
        assert_eq!(f.springer(3, ScalarSource::Egf).unwrap(), BigInt::from(11));
        assert_eq!(f.springer(3, ScalarSource::Enumeration).unwrap(), BigInt::from(11));
        assert_eq!(f.secant(6, ScalarSource::Xi).unwrap(), BigInt::from(61));
        assert_eq!(f.secant(6, ScalarSource::Egf).unwrap(), BigInt::from(61));
        assert_eq!(f.secant(4, ScalarSource::Enumeration).unwrap(), BigInt::from(5));
        assert!(f.secant(3, ScalarSource::Xi).is_err());
    }

    #[test]
    fn tables_carry_provenance() {
        let f = Families::new(EnumCap::from_single(3));
        let t = f.table(Family::M, 0, 7).unwrap();
        assert_eq!(t.rows.first().unwrap().n, 1);
        assert_eq!(t.rows[4].provenance, Provenance::Enumeration);
        assert_eq!(t.rows[5].provenance, Provenance::Identity);
        let s = f.table(Family::Secant, 0, 3).unwrap();
        let vals: Vec<String> = s.rows.iter().map(|r| r.poly.to_string()).collect();
        assert_eq!(vals, ["1", "1", "5", "61"]);
        assert!("alt".parse::<Family>().is_err());
    }
}
