//! Pass/fail verdicts for identity checks.

use std::fmt;
use std::ops::RangeInclusive;

use num_traits::Zero;

use crate::exactpoly::{Poly, Rational, Var};

/// First place an identity was seen to fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    /// Coefficient index (power of `x`, or of `z` for series checks).
    pub index: Option<usize>,
    pub detail: String,
}

impl Counterexample {
    pub fn at(n: usize, detail: impl Into<String>) -> Self {
        Counterexample {
            n,
            index: None,
            detail: detail.into(),
        }
    }

    pub fn with_index(mut self, index: usize) -> Self {
        self.index = Some(index);
        self
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(k) = self.index {
            write!(f, " k={k}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictReport {
    pub id: String,
    pub range: Option<(usize, usize)>,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub note: Option<String>,
}

impl VerdictReport {
    pub fn pass(id: &str, range: Option<(usize, usize)>) -> Self {
        VerdictReport {
            id: id.to_string(),
            range,
            passed: true,
            counterexample: None,
            note: None,
        }
    }

    pub fn fail(id: &str, range: Option<(usize, usize)>, cex: Counterexample) -> Self {
        VerdictReport {
            id: id.to_string(),
            range,
            passed: false,
            counterexample: Some(cex),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Run `check` for each `n` in `range`, stopping at the first failure.
    pub fn over_range<F>(id: &str, range: RangeInclusive<usize>, mut check: F) -> Self
    where
        F: FnMut(usize) -> Result<(), Counterexample>,
    {
        let bounds = Some((*range.start(), *range.end()));
        for n in range {
            if let Err(cex) = check(n) {
                return VerdictReport::fail(id, bounds, cex);
            }
        }
        VerdictReport::pass(id, bounds)
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.passed { "PASS" } else { "FAIL" }, self.id)?;
        if let Some((lo, hi)) = self.range {
            write!(f, " [n={lo}..{hi}]")?;
        }
        if let Some(cex) = &self.counterexample {
            write!(f, " first failure {cex}")?;
        }
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Compare two polynomials in `x`; on mismatch report the lowest differing
/// coefficient.
pub fn compare_in_x(n: usize, what: &str, expected: &Poly, got: &Poly) -> Result<(), Counterexample> {
    if expected == got {
        return Ok(());
    }
    let x = Var::new("x");
    let diff = expected - got;
    match (expected.coeffs_in(&x), got.coeffs_in(&x), diff.coeffs_in(&x)) {
        (Ok(e), Ok(g), Ok(d)) => {
            let k = d.iter().position(|c| !c.is_zero()).unwrap_or(0);
            let at = |v: &[Rational]| v.get(k).cloned().unwrap_or_else(Rational::zero);
            Err(Counterexample::at(
                n,
                format!("{what}: expected {} got {}", at(&e), at(&g)),
            )
            .with_index(k))
        }
        _ => Err(Counterexample::at(n, format!("{what}: expected {expected} got {got}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_reported() {
        let r = VerdictReport::over_range("demo", 0..=10, |n| {
            if n >= 4 {
                Err(Counterexample::at(n, "boom").with_index(2))
            } else {
                Ok(())
            }
        });
        assert!(!r.passed);
        assert_eq!(r.counterexample.as_ref().unwrap().n, 4);
        assert_eq!(r.to_string(), "FAIL demo [n=0..10] first failure n=4 k=2: boom");
    }

    #[test]
    fn compare_names_lowest_coefficient() {
        let a = Poly::parse("1+2x+3x^2").unwrap();
        let b = Poly::parse("1+2x+4x^2").unwrap();
        let cex = compare_in_x(7, "row", &a, &b).unwrap_err();
        assert_eq!(cex.index, Some(2));
        assert_eq!(cex.detail, "row: expected 3 got 4");
        assert!(compare_in_x(7, "row", &a, &a).is_ok());
    }
}
