//! Operations that treat a `Poly` as a polynomial in one named variable.
//! Degree windows are explicit: a family member of index `n` is compared in
//! window `n` even if its top coefficients vanish.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Monomial, Poly, PolyError, Rational, Var};

impl Poly {
    /// Build `Σ c_k v^k`.
    pub fn from_coeffs<I, C>(v: &Var, coeffs: I) -> Poly
    where
        I: IntoIterator<Item = C>,
        C: Into<Rational>,
    {
        Poly::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (Monomial::from_pairs([(v.clone(), k as u32)]), c.into())),
        )
    }

    /// Build `Σ c_k v^k` from integer coefficients.
    pub fn from_int_coeffs<'a, I>(v: &Var, coeffs: I) -> Poly
    where
        I: IntoIterator<Item = &'a BigInt>,
    {
        Poly::from_coeffs(v, coeffs.into_iter().map(|c| Rational::from_integer(c.clone())))
    }

    /// Dense coefficient list `[c_0, ..., c_d]`; empty for zero.
    pub fn coeffs_in(&self, v: &Var) -> Result<Vec<Rational>, PolyError> {
        let deg = match self.degree_in(v).finite() {
            None => return Ok(Vec::new()),
            Some(d) => d as usize,
        };
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in self.terms() {
            if let Some((w, _)) = m.iter().find(|(w, _)| *w != v) {
                return Err(PolyError::NotUnivariate {
                    expected: v.clone(),
                    found: w.clone(),
                });
            }
            out[m.exponent(v) as usize] = c.clone();
        }
        Ok(out)
    }

    /// Dense coefficient list padded with zeros to length `m + 1`.
    pub fn coeffs_window(&self, v: &Var, m: u32) -> Result<Vec<Rational>, PolyError> {
        let mut c = self.coeffs_in(v)?;
        if c.len() > m as usize + 1 {
            return Err(PolyError::DegreeExceedsWindow {
                degree: (c.len() - 1) as u32,
                window: m,
            });
        }
        c.resize(m as usize + 1, Rational::zero());
        Ok(c)
    }

    /// Integer coefficients, failing on any non-integer.
    pub fn int_coeffs_in(&self, v: &Var) -> Result<Vec<BigInt>, PolyError> {
        self.coeffs_in(v)?
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(PolyError::NonIntegerCoefficient(c))
                }
            })
            .collect()
    }

    /// `Σ_k g_k · plus^k · minus^(m-k)`, the cleared-denominator form of
    /// `minus^m · g(plus/minus)`.
    pub fn binomial_substitute(
        &self,
        v: &Var,
        m: u32,
        plus: &Poly,
        minus: &Poly,
    ) -> Result<Poly, PolyError> {
        let g = self.coeffs_window(v, m)?;
        let mut plus_pows = vec![Poly::one()];
        let mut minus_pows = vec![Poly::one()];
        for k in 1..=m as usize {
            plus_pows.push(&plus_pows[k - 1] * plus);
            minus_pows.push(&minus_pows[k - 1] * minus);
        }
        let mut out = Poly::zero();
        for (k, gk) in g.iter().enumerate() {
            if gk.is_zero() {
                continue;
            }
            out += (&plus_pows[k] * &minus_pows[m as usize - k]).scale(gk);
        }
        Ok(out)
    }

    /// `v^m · g(1/v)`.
    pub fn reversal(&self, v: &Var, m: u32) -> Result<Poly, PolyError> {
        let mut g = self.coeffs_window(v, m)?;
        g.reverse();
        Ok(Poly::from_coeffs(v, g))
    }

    pub fn is_palindromic(&self, v: &Var, m: u32) -> Result<bool, PolyError> {
        Ok(&self.reversal(v, m)? == self)
    }

    /// Coefficients weakly rise, then weakly fall. Requires nonnegative
    /// integer coefficients.
    pub fn is_unimodal(&self, v: &Var) -> Result<bool, PolyError> {
        let c = self.coeffs_in(v)?;
        for x in &c {
            if x.is_negative() {
                return Err(PolyError::NegativeCoefficient(x.clone()));
            }
            if !x.is_integer() {
                return Err(PolyError::NonIntegerCoefficient(x.clone()));
            }
        }
        Ok(is_unimodal_seq(&c))
    }
}

pub(crate) fn is_unimodal_seq<T: PartialOrd>(c: &[T]) -> bool {
    let mut i = 1;
    while i < c.len() && c[i - 1] <= c[i] {
        i += 1;
    }
    while i < c.len() && c[i - 1] >= c[i] {
        i += 1;
    }
    i >= c.len()
}
