//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Poly`] is a map from [`Monomial`] to a nonzero [`Rational`]. Every
//! operation keeps that map canonical, so two polynomials are equal exactly
//! when their term maps are equal.

mod json;
mod parse;
mod univariate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use parse::ParseError;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Build a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Build the rational `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(Var),
    #[error("expected a polynomial in `{expected}` only, found variable `{found}`")]
    NotUnivariate { expected: Var, found: Var },
    #[error("degree {degree} exceeds window {window}")]
    DegreeExceedsWindow { degree: u32, window: u32 },
    #[error("coefficient {0} is negative")]
    NegativeCoefficient(Rational),
    #[error("coefficient {0} is not an integer")]
    NonIntegerCoefficient(Rational),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// A variable name. Cheap to clone; ordered by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Var {
    fn from(name: &str) -> Self {
        Var::new(name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// A power product of variables. Stored sorted by variable, no zero exponents.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: &Var) -> Self {
        Monomial(vec![(v.clone(), 1)])
    }

    /// Build from `(variable, exponent)` pairs; repeated variables are merged
    /// and zero exponents dropped.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Var, u32)>,
    {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, u32)> {
        self.0.iter().map(|(v, e)| (v, *e))
    }

    /// Divide out one factor of `v`, returning the old exponent and the quotient.
    pub fn lower(&self, v: &Var) -> Option<(u32, Monomial)> {
        let i = self.0.binary_search_by(|(w, _)| w.cmp(v)).ok()?;
        let e = self.0[i].1;
        let mut rest = self.0.clone();
        if e == 1 {
            rest.remove(i);
        } else {
            rest[i].1 -= 1;
        }
        Some((e, Monomial(rest)))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Exponent vector against an ordered variable list.
    pub fn exponents_in(&self, vars: &[Var]) -> Vec<u32> {
        vars.iter().map(|v| self.exponent(v)).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse multivariate polynomial over the rationals.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(rat(c))
    }

    pub fn var(name: &str) -> Self {
        Poly::term(Monomial::var(&Var::new(name)), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// `c * v^e`.
    pub fn monomial(v: &Var, e: u32, c: Rational) -> Self {
        Poly::term(Monomial::from_pairs([(v.clone(), e)]), c)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Returns the value if this polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Variables that occur in some term, in name order.
    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| Degree::Finite(m.total_degree()))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn degree_in(&self, v: &Var) -> Degree {
        self.terms
            .keys()
            .map(|m| Degree::Finite(m.exponent(v)))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial(&self, v: &Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.lower(v) {
                out.add_term(rest, c * rat(i64::from(e)));
            }
        }
        out
    }

    /// Replace every variable by its image. Every variable of `self` must be
    /// assigned.
    pub fn substitute(&self, assignment: &BTreeMap<Var, Poly>) -> Result<Poly, PolyError> {
        let mut powers: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (v, e) in m.iter() {
                let image = assignment
                    .get(v)
                    .ok_or_else(|| PolyError::MissingAssignment(v.clone()))?;
                let key = (v.clone(), e);
                let pw = powers.entry(key).or_insert_with(|| image.pow(e));
                t = &t * &*pw;
            }
            out += &t;
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational, PolyError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let x = point
                    .get(v)
                    .ok_or_else(|| PolyError::MissingAssignment(v.clone()))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluate a polynomial in the single variable `v` (constants allowed).
    pub fn eval_at(&self, v: &Var, x: &Rational) -> Result<Rational, PolyError> {
        let mut point = BTreeMap::new();
        point.insert(v.clone(), x.clone());
        self.eval(&point)
    }

    /// Swap two variables throughout.
    pub fn swap_vars(&self, a: &Var, b: &Var) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let pairs = m.iter().map(|(v, e)| {
                let w = if v == a {
                    b.clone()
                } else if v == b {
                    a.clone()
                } else {
                    v.clone()
                };
                (w, e)
            });
            (Monomial::from_pairs(pairs), c.clone())
        }))
    }

    /// Terms in canonical order: ascending exponent vectors over `vars`.
    pub fn ordered_terms(&self, vars: &[Var]) -> Vec<(Vec<u32>, &Monomial, &Rational)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.exponents_in(vars), m, c))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn parse(src: &str) -> Result<Poly, ParseError> {
        parse::parse_poly(src)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let vars: Vec<Var> = self.vars().into_iter().collect();
        for (i, (_, m, c)) in self.ordered_terms(&vars).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<'a> AddAssign<&'a Poly> for Poly {
    fn add_assign(&mut self, rhs: &'a Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<'a> SubAssign<&'a Poly> for Poly {
    fn sub_assign(&mut self, rhs: &'a Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl SubAssign<Poly> for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &'a Poly) -> Poly { (&self).$f(rhs) }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly { self.$f(&rhs) }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc = Poly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    fn x() -> Var {
        Var::new("x")
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((p("x") + p("-x")).is_zero());
        assert_eq!(p("1+x") + p("x"), p("1+2x"));
        let a2 = p("1+x");
        assert_eq!(&a2 + &a2, p("2+2x"));
    }

    #[test]
    fn products() {
        assert_eq!(p("1+x") * p("1-x"), p("1-x^2"));
        assert_eq!(p("x+y").pow(2), p("x^2+2*x*y+y^2"));
        let b2 = p("3") * p("1+x").pow(2) + p("-4x") * Poly::one();
        assert_eq!(b2, p("3+2x+3x^2"));
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p("x^2*y").partial(&x()), p("2*x*y"));
        assert_eq!(p("1+x+x^2").partial(&x()), p("1+2x"));
        assert_eq!(p("3+2x+3x^2").partial(&x()), p("2+6x"));
        assert!(Poly::int(7).partial(&x()).is_zero());
    }

    #[test]
    fn substitution() {
        let mut asg = BTreeMap::new();
        asg.insert(Var::new("a"), p("x+y"));
        asg.insert(Var::new("b"), p("x*y"));
        assert_eq!(p("a^2-b").substitute(&asg).unwrap(), p("x^2+x*y+y^2"));

        let mut asg = BTreeMap::new();
        asg.insert(Var::new("a"), p("1+x"));
        asg.insert(Var::new("b"), p("x"));
        assert_eq!(
            p("11a^3-20a*b").substitute(&asg).unwrap(),
            p("11+13x+13x^2+11x^3")
        );

        let mut id = BTreeMap::new();
        id.insert(x(), p("x"));
        assert_eq!(p("x").substitute(&id).unwrap(), p("x"));
    }

    #[test]
    fn substitution_requires_every_variable() {
        let mut asg = BTreeMap::new();
        asg.insert(Var::new("a"), p("x"));
        assert_eq!(
            p("a*b").substitute(&asg),
            Err(PolyError::MissingAssignment(Var::new("b")))
        );
    }

    #[test]
    fn coefficients() {
        let b2 = p("3+2x+3x^2");
        assert_eq!(b2.coefficient(&Monomial::var(&x())), rat(2));
        let xy2 = Monomial::from_pairs([(x(), 1), (Var::new("y"), 2)]);
        assert_eq!(p("x^2*y").coefficient(&xy2), rat(0));
    }

    #[test]
    fn evaluation() {
        let xi4 = p("57+38x+5x^2");
        assert_eq!(xi4.eval_at(&x(), &rat(-1)).unwrap(), rat(24));
        let xi5 = p("361+302x+61x^2");
        assert_eq!(xi5.eval_at(&x(), &rat(-1)).unwrap(), rat(120));
        assert_eq!(p("1+x").eval_at(&x(), &rat(0)).unwrap(), rat(1));
        assert!(p("x*y").eval_at(&x(), &rat(1)).is_err());
    }

    #[test]
    fn zero_has_negative_infinite_degree() {
        assert_eq!(Poly::zero().degree_in(&x()), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(p("3").degree_in(&x()), Degree::Finite(0));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("3x^2 + 3 + 2x").to_string(), "3 + 2*x + 3*x^2");
        assert_eq!(p("1/2*x^2 - y").to_string(), "-y + 1/2*x^2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
    }
}
