//! Truncated power series in `z` whose coefficients are polynomials in `x`.
//!
//! Every generating function here involves `cos(z√u)` or `sin(z√u)` for a
//! polynomial `u`. The square roots never appear: `cos(z√u)` only has even
//! powers of `z`, each carrying `u^k`, and `sin(z√u)/√u` only has odd powers,
//! again carrying `u^k`. Each closed form is rearranged so that every
//! `√u` is paired off this way, after which all coefficients are polynomials
//! and the identity can be checked by exact cross-multiplication. Nothing is
//! ever divided by a polynomial.

use num_bigint::BigInt;
use serde_json::Value;
use thiserror::Error;

use crate::exactpoly::{rat, Poly, Rational, Var};
use crate::families::{factorial, Families, FamilyError};
use crate::par::{self, ExecMode};
use crate::report::{compare_in_x, Counterexample, VerdictReport};

/// Default truncation order for the generating-function checks.
pub const DEFAULT_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term {0} is not an invertible rational")]
    NotInvertible(String),
}

/// `Σ_{n ≤ order} coeffs[n] z^n`, with plain (not factorial-scaled)
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<Poly>,
}

fn x() -> Var {
    Var::new("x")
}

fn inv_factorial(n: usize) -> Rational {
    Rational::new(1.into(), factorial(n))
}

impl TruncatedSeries {
    /// Pads with zeros or truncates to `order`.
    pub fn new(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: Poly) -> Self {
        Self::new(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Poly::one())
    }

    /// `Σ rows[n] z^n / n!`.
    pub fn from_egf_rows(order: usize, rows: &[Poly]) -> Self {
        let coeffs = rows
            .iter()
            .take(order + 1)
            .enumerate()
            .map(|(n, r)| r.scale(&inv_factorial(n)))
            .collect();
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// `[z^n]`.
    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    /// `n! [z^n]`.
    pub fn egf_coeff(&self, n: usize) -> Poly {
        self.coeffs[n].scale(&Rational::from_integer(factorial(n)))
    }

    fn same_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch { left: self.order, right: other.order })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self::new(self.order, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self::new(self.order, coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.mul_with(other, ExecMode::default())
    }

    /// Truncated product, one output order per task.
    pub fn mul_with(&self, other: &Self, mode: ExecMode) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        let orders: Vec<usize> = (0..=self.order).collect();
        let coeffs = par::map_collect(mode, orders, |n| {
            (0..=n)
                .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[n - i].is_zero())
                .map(|i| &self.coeffs[i] * &other.coeffs[n - i])
                .sum()
        });
        Ok(Self::new(self.order, coeffs))
    }

    /// Multiply every coefficient by a polynomial in `x`.
    pub fn scale_poly(&self, p: &Poly) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| c * p).collect())
    }

    /// `1 / self`. The constant term must be a nonzero rational.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let head = self.coeffs[0]
            .as_constant()
            .filter(|c| *c != rat(0))
            .ok_or_else(|| SeriesError::NotInvertible(self.coeffs[0].to_string()))?;
        let inv = Rational::from_integer(1.into()) / head;
        let mut out: Vec<Poly> = Vec::with_capacity(self.order + 1);
        out.push(Poly::constant(inv.clone()));
        for n in 1..=self.order {
            let acc: Poly = (1..=n).map(|i| &self.coeffs[i] * &out[n - i]).sum();
            out.push(acc.scale(&-inv.clone()));
        }
        Ok(Self::new(self.order, out))
    }

    /// `∂/∂z`, one order shorter.
    pub fn d_dz(&self) -> Self {
        let order = self.order.saturating_sub(1);
        let coeffs = (1..=self.order)
            .map(|n| self.coeffs[n].scale(&rat(n as i64)))
            .collect();
        Self::new(order, coeffs)
    }

    /// `z · self`, truncated at the same order.
    pub fn shift_z(&self) -> Self {
        let mut coeffs = vec![Poly::zero()];
        coeffs.extend(self.coeffs.iter().take(self.order).cloned());
        Self::new(self.order, coeffs)
    }

    /// `∂/∂x` coefficientwise.
    pub fn partial_x(&self) -> Self {
        let v = x();
        Self::new(self.order, self.coeffs.iter().map(|c| c.partial(&v)).collect())
    }

    /// Drop all orders above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs[..=order.min(self.order)].to_vec())
    }

    /// Smallest order at which the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        (0..=self.order.min(other.order)).find(|&n| self.coeffs[n] != other.coeffs[n])
    }

    /// JSON array of polynomials, indexed by the power of `z`.
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(Poly::to_json).collect())
    }

    fn trig(order: usize, u: &Poly, parity: usize, alternate: bool) -> Self {
        let mut coeffs = vec![Poly::zero(); order + 1];
        let mut u_pow = Poly::one();
        let mut k = 0usize;
        while 2 * k + parity <= order {
            let n = 2 * k + parity;
            let sign = if alternate && k % 2 == 1 { -1 } else { 1 };
            coeffs[n] = u_pow.scale(&(inv_factorial(n) * rat(sign)));
            u_pow = &u_pow * u;
            k += 1;
        }
        Self::new(order, coeffs)
    }

    /// `cos(z√u)`: `[z^2k] = (-1)^k u^k / (2k)!`.
    pub fn cos_like(order: usize, u: &Poly) -> Self {
        Self::trig(order, u, 0, true)
    }

    /// `sin(z√u)/√u`: `[z^(2k+1)] = (-1)^k u^k / (2k+1)!`.
    pub fn sinq_like(order: usize, u: &Poly) -> Self {
        Self::trig(order, u, 1, true)
    }

    /// `cosh(z√u)`.
    pub fn cosh_like(order: usize, u: &Poly) -> Self {
        Self::trig(order, u, 0, false)
    }

    /// `sinh(z√u)/√u`.
    pub fn sinhq_like(order: usize, u: &Poly) -> Self {
        Self::trig(order, u, 1, false)
    }
}

fn p(src: &str) -> Poly {
    Poly::parse(src).expect("literal polynomial")
}

/// Compare two series order by order, naming the first failing `z`-order.
fn compare_series(id: &str, what: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> VerdictReport {
    let range = Some((0, lhs.order()));
    match lhs.first_mismatch(rhs) {
        None => VerdictReport::pass(id, range),
        Some(n) => {
            let cex = compare_in_x(n, what, rhs.coeff(n), lhs.coeff(n)).expect_err("coefficients differ");
            VerdictReport::fail(id, range, cex)
        }
    }
}

fn family_failure(id: &str, order: usize, err: FamilyError) -> VerdictReport {
    let n = err.row().unwrap_or(0);
    VerdictReport::fail(id, Some((0, order)), Counterexample::at(n, format!("family unavailable: {err}")))
}

/// The denominator `√u cos(z√u) - sin(z√u)` divided by `√u`.
fn trig_denominator(order: usize, u: &Poly, hyperbolic: bool) -> TruncatedSeries {
    let (c, s) = if hyperbolic {
        (TruncatedSeries::cosh_like(order, u), TruncatedSeries::sinhq_like(order, u))
    } else {
        (TruncatedSeries::cos_like(order, u), TruncatedSeries::sinq_like(order, u))
    };
    c.sub(&s).expect("same order")
}

/// `M_0 .. M_n` read off `1 / (cosh(z√(1-x)) - sinh(z√(1-x))/√(1-x))`.
pub fn left_peak_rows(n: usize) -> Result<Vec<Poly>, SeriesError> {
    let s = trig_denominator(n, &p("1-x"), true).reciprocal()?;
    Ok((0..=n).map(|k| s.egf_coeff(k)).collect())
}

fn scalar_rows(s: &TruncatedSeries) -> Vec<BigInt> {
    (0..=s.order())
        .map(|k| {
            s.egf_coeff(k)
                .as_constant()
                .expect("x-free series")
                .to_integer()
        })
        .collect()
}

/// `s_0 .. s_n` from `1 / (cos z - sin z)`.
pub fn springer_numbers(n: usize) -> Result<Vec<BigInt>, SeriesError> {
    Ok(scalar_rows(&trig_denominator(n, &Poly::one(), false).reciprocal()?))
}

/// `n! [z^n] sec z` for `0..=n`; zero at odd indices.
pub fn secant_numbers(n: usize) -> Result<Vec<BigInt>, SeriesError> {
    Ok(scalar_rows(&TruncatedSeries::cos_like(n, &Poly::one()).reciprocal()?))
}

/// `(1 + Σ x Â_n z^n/n!)(1 - x(sec + tan)((1-x)z)) = 1 - x`, multiplied
/// through by `cos((1-x)z)`.
pub fn verify_egf_alt_a(fam: &Families, order: usize) -> VerdictReport {
    const ID: &str = "egf.altA";
    let rows = match fam.alt_a_rows(order) {
        Ok(r) => r,
        Err(e) => return family_failure(ID, order, e),
    };
    let xv = Poly::var("x");
    let mut lhs_rows = vec![Poly::one()];
    lhs_rows.extend(rows.iter().map(|r| &xv * &Poly::from_int_coeffs(&x(), r)));
    let a = TruncatedSeries::from_egf_rows(order, &lhs_rows);
    let w = p("1-x");
    let u = &w * &w;
    let cos = TruncatedSeries::cos_like(order, &u);
    let sin = TruncatedSeries::sinq_like(order, &u).scale_poly(&w);
    let denom = cos
        .sub(&TruncatedSeries::constant(order, xv.clone()))
        .and_then(|d| d.sub(&sin.scale_poly(&xv)))
        .expect("same order");
    let lhs = a.mul(&denom).expect("same order");
    let rhs = cos.scale_poly(&w);
    compare_series(ID, "product", &lhs, &rhs)
}

/// `B̂(x;z) · (cos(zw) - (x+1) sin(zw)/w) = 1` with `w = x - 1`.
pub fn verify_egf_alt_b(fam: &Families, order: usize) -> VerdictReport {
    const ID: &str = "egf.altB";
    let rows = match fam.alt_b_rows(order) {
        Ok(r) => r,
        Err(e) => return family_failure(ID, order, e),
    };
    let rows: Vec<Poly> = rows.iter().map(|r| Poly::from_int_coeffs(&x(), r)).collect();
    let b = TruncatedSeries::from_egf_rows(order, &rows);
    let w = p("x-1");
    let u = &w * &w;
    let denom = TruncatedSeries::cos_like(order, &u)
        .sub(&TruncatedSeries::sinq_like(order, &u).scale_poly(&p("x+1")))
        .expect("same order");
    compare_series(ID, "product", &b.mul(&denom).expect("same order"), &TruncatedSeries::one(order))
}

/// `M(x;z) · (cosh(z√(1-x)) - sinh(z√(1-x))/√(1-x)) = 1`, with `M_n` from
/// enumeration inside the cap and from `ξ_n(x-2)` beyond it.
pub fn verify_egf_m(fam: &Families, order: usize) -> VerdictReport {
    const ID: &str = "egf.M";
    let mut rows = vec![Poly::one()];
    for n in 1..=order {
        match fam.left_peak_m_default(n) {
            Ok((m, _)) => rows.push(m),
            Err(e) => return family_failure(ID, order, e),
        }
    }
    let m = TruncatedSeries::from_egf_rows(order, &rows);
    let denom = trig_denominator(order, &p("1-x"), true);
    compare_series(ID, "product", &m.mul(&denom).expect("same order"), &TruncatedSeries::one(order))
}

/// `ξ(x;z) · (cos(z√(1+x)) - sin(z√(1+x))/√(1+x)) = 1`.
pub fn verify_egf_xi(fam: &Families, order: usize) -> VerdictReport {
    const ID: &str = "egf.xi";
    let rows = match fam.xi_rows(order) {
        Ok(r) => r,
        Err(e) => return family_failure(ID, order, e),
    };
    let rows: Vec<Poly> = rows.iter().map(|r| Poly::from_int_coeffs(&x(), r)).collect();
    let xi = TruncatedSeries::from_egf_rows(order, &rows);
    let denom = trig_denominator(order, &p("1+x"), false);
    compare_series(ID, "product", &xi.mul(&denom).expect("same order"), &TruncatedSeries::one(order))
}

/// `Σ s_n z^n/n! · (cos z - sin z) = 1`, with `s_n = B̂(n,0)`.
pub fn verify_egf_springer(fam: &Families, order: usize) -> VerdictReport {
    const ID: &str = "egf.springer";
    let rows = match fam.alt_b_rows(order) {
        Ok(r) => r,
        Err(e) => return family_failure(ID, order, e),
    };
    let rows: Vec<Poly> = rows.iter().map(|r| Poly::constant(Rational::from_integer(r[0].clone()))).collect();
    let s = TruncatedSeries::from_egf_rows(order, &rows);
    let denom = trig_denominator(order, &Poly::one(), false);
    compare_series(ID, "product", &s.mul(&denom).expect("same order"), &TruncatedSeries::one(order))
}

/// `E_{2n} = ξ_{2n,n}` against `(2n)! [z^2n] sec z`.
pub fn verify_egf_secant(fam: &Families, order: usize) -> VerdictReport {
    const ID: &str = "egf.secant";
    let sec = match TruncatedSeries::cos_like(order, &Poly::one()).reciprocal() {
        Ok(s) => s,
        Err(e) => return family_failure(ID, order, e.into()),
    };
    let rows = match fam.xi_rows(order) {
        Ok(r) => r,
        Err(e) => return family_failure(ID, order, e),
    };
    let from_xi: Vec<Poly> = (0..=order)
        .map(|n| {
            if n % 2 == 1 {
                Poly::zero()
            } else {
                let e = rows[n].get(n / 2).cloned().unwrap_or_default();
                Poly::constant(Rational::from_integer(e))
            }
        })
        .collect();
    let from_xi = TruncatedSeries::from_egf_rows(order, &from_xi);
    compare_series(ID, "sec z", &from_xi, &sec)
}

/// `∂_z B̂ = (1+x)B̂ + (1+x²) z ∂_z B̂ + (1-x)(1+x²) ∂_x B̂`, to order `order - 1`.
pub fn pde_check_alt_b(fam: &Families, order: usize) -> VerdictReport {
    const ID: &str = "egf.altB_pde";
    let order = order.max(1);
    let rows = match fam.alt_b_rows(order) {
        Ok(r) => r,
        Err(e) => return family_failure(ID, order, e),
    };
    let rows: Vec<Poly> = rows.iter().map(|r| Poly::from_int_coeffs(&x(), r)).collect();
    let b = TruncatedSeries::from_egf_rows(order, &rows);
    let top = order - 1;
    let bz = b.d_dz();
    let lhs = bz.clone();
    let rhs = b
        .truncate(top)
        .scale_poly(&p("1+x"))
        .add(&bz.shift_z().scale_poly(&p("1+x^2")))
        .and_then(|s| s.add(&b.partial_x().truncate(top).scale_poly(&p("(1-x)(1+x^2)"))))
        .expect("same order");
    let mut report = compare_series(ID, "d/dz", &lhs, &rhs);
    report.range = Some((0, top));
    report
}

/// Every generating-function check at one order, in fixed order.
pub fn egf_suite(fam: &Families, order: usize) -> Vec<VerdictReport> {
    vec![
        verify_egf_alt_a(fam, order),
        verify_egf_alt_b(fam, order),
        verify_egf_m(fam, order),
        verify_egf_xi(fam, order),
        verify_egf_springer(fam, order),
        verify_egf_secant(fam, order),
        pde_check_alt_b(fam, order),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::ratio;

    fn series(order: usize, cs: &[&str]) -> TruncatedSeries {
        TruncatedSeries::new(order, cs.iter().map(|c| p(c)).collect())
    }

    #[test]
    fn products_and_sums() {
        let a = series(3, &["1", "1"]);
        let b = series(3, &["1", "-1"]);
        assert_eq!(a.mul(&b).unwrap(), series(3, &["1", "0", "-1"]));
        assert_eq!(a.add(&b).unwrap(), series(3, &["2"]));
        assert!(a.mul(&series(4, &["1"])).is_err());
        let cos = TruncatedSeries::cos_like(10, &Poly::one());
        assert_eq!(cos.mul(&cos.reciprocal().unwrap()).unwrap(), TruncatedSeries::one(10));
    }

    #[test]
    fn reciprocals() {
        let geo = series(5, &["1", "-1"]).reciprocal().unwrap();
        assert_eq!(geo, series(5, &["1", "1", "1", "1", "1", "1"]));
        let sec = TruncatedSeries::cos_like(6, &Poly::one()).reciprocal().unwrap();
        assert_eq!(sec.coeff(4), &Poly::constant(ratio(5, 24)));
        assert!(series(3, &["1-x"]).reciprocal().is_err());
        assert!(series(3, &["0", "1"]).reciprocal().is_err());
    }

    #[test]
    fn sqrt_calculus() {
        let w = p("x-1");
        let s = TruncatedSeries::sinq_like(7, &(&w * &w)).scale_poly(&w);
        // sin(zw) = Σ (-1)^k w^(2k+1) z^(2k+1) / (2k+1)!
        assert_eq!(s.coeff(3), &w.pow(3).scale(&ratio(-1, 6)));
        assert_eq!(s.coeff(5), &w.pow(5).scale(&ratio(1, 120)));
        assert_eq!(left_peak_rows(2).unwrap()[2], p("1+x"));
    }

    #[test]
    fn pythagorean_identity() {
        for u in ["1", "1+x", "(x-1)^2"] {
            let u = p(u);
            let c = TruncatedSeries::cos_like(12, &u);
            let s = TruncatedSeries::sinq_like(12, &u);
            let lhs = c.mul(&c).unwrap().add(&s.mul(&s).unwrap().scale_poly(&u)).unwrap();
            assert_eq!(lhs, TruncatedSeries::one(12), "u = {u}");
        }
    }

    #[test]
    fn scalar_sequences() {
        let s: Vec<i64> = springer_numbers(5).unwrap().iter().map(|b| b.try_into().unwrap()).collect();
        assert_eq!(s, [1, 1, 3, 11, 57, 361]);
        let e: Vec<i64> = secant_numbers(6).unwrap().iter().map(|b| b.try_into().unwrap()).collect();
        assert_eq!(e, [1, 0, 1, 0, 5, 0, 61]);
    }

    #[test]
    fn generating_function_checks() {
        let fam = Families::default();
        for order in [0, 1, 5, 12] {
            for r in egf_suite(&fam, order) {
                assert!(r.passed, "{r}");
            }
        }
    }

    #[test]
    fn pde_constant_term() {
        let fam = Families::default();
        let rows: Vec<Poly> = (0..=3).map(|n| fam.alt_b(n).unwrap()).collect();
        let b = TruncatedSeries::from_egf_rows(3, &rows);
        assert_eq!(b.d_dz().coeff(0), &p("1+x"));
    }

    #[test]
    fn faults_show_up_at_the_first_order() {
        let fam = Families::default();
        let mut bad = fam.clone();
        bad.recurrences.xi.terms[0].base += 1;
        let r = verify_egf_xi(&bad, 8);
        assert!(!r.passed);
        assert_eq!(r.counterexample.unwrap().n, 1);
        bad.recurrences = fam.recurrences.clone();
        bad.recurrences.alt_a.terms[2].n_coef += 2;
        let r = verify_egf_alt_a(&bad, 8);
        assert!(!r.passed);
        assert_eq!(r.counterexample.unwrap().n, 3);
    }

    #[test]
    fn json_dump() {
        let v = series(1, &["1", "x"]).to_json();
        assert_eq!(v.as_array().unwrap().len(), 2);
    }
}
