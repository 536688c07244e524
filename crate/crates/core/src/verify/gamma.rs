//! Expansion in the scaled gamma basis `(c·x)^k (1+x)^(m-2k)`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactpoly::{Monomial, Poly, PolyError, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("basis scale must be nonzero")]
    ZeroScale,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("not in the gamma span: residual {0}")]
    NotInSpan(Poly),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaExpansion {
    pub basis_scale: Rational,
    pub window: u32,
    /// `coeffs[k]` for `k = 0..=window/2`.
    pub coeffs: Vec<Rational>,
}

fn basis(c: &Rational, m: u32, k: u32) -> Poly {
    let x = Var::new("x");
    let one_plus_x = Poly::var("x") + Poly::one();
    Poly::monomial(&x, k, num_traits::pow(c.clone(), k as usize)) * one_plus_x.pow(m - 2 * k)
}

impl GammaExpansion {
    pub fn reassemble(&self) -> Poly {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(k, g)| basis(&self.basis_scale, self.window, k as u32).scale(g))
            .sum()
    }
}

/// Peel basis elements off from the lowest degree up: element `k` has
/// `x`-valuation exactly `k`, so the `x^k` coefficient of what is left fixes
/// `coeffs[k]`. Anything left over afterwards means `f` is not in the span.
pub fn gamma_extract(f: &Poly, c: &Rational, m: u32) -> Result<GammaExpansion, GammaError> {
    if c.is_zero() {
        return Err(GammaError::ZeroScale);
    }
    let x = Var::new("x");
    f.coeffs_window(&x, m)?;
    let mut residual = f.clone();
    let mut coeffs = Vec::with_capacity(m as usize / 2 + 1);
    let mut c_pow = Rational::one();
    for k in 0..=m / 2 {
        let lead = residual.coefficient(&Monomial::from_pairs([(x.clone(), k)]));
        let g = lead / &c_pow;
        if !g.is_zero() {
            residual -= basis(c, m, k).scale(&g);
        }
        coeffs.push(g);
        c_pow *= c;
    }
    if !residual.is_zero() {
        return Err(GammaError::NotInSpan(residual));
    }
    Ok(GammaExpansion {
        basis_scale: c.clone(),
        window: m,
        coeffs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn known_expansions() {
        let g = gamma_extract(&p("3+2x+3x^2"), &rat(-4), 2).unwrap();
        assert_eq!(g.coeffs, [rat(3), rat(1)]);
        let g = gamma_extract(&p("2+2x+2x^2"), &rat(-2), 2).unwrap();
        assert_eq!(g.coeffs, [rat(2), rat(1)]);
        let g = gamma_extract(&p("(1+x)^5"), &rat(7), 5).unwrap();
        assert_eq!(g.coeffs, [rat(1), rat(0), rat(0)]);
        assert_eq!(g.reassemble(), p("(1+x)^5"));
    }

    #[test]
    fn refusals() {
        assert!(matches!(gamma_extract(&p("1+x"), &rat(0), 1), Err(GammaError::ZeroScale)));
        assert!(matches!(gamma_extract(&p("1+x^3"), &rat(1), 2), Err(GammaError::Poly(_))));
        assert!(matches!(gamma_extract(&p("1+2x"), &rat(1), 1), Err(GammaError::NotInSpan(_))));
    }
}
