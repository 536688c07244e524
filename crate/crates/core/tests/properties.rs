use std::collections::BTreeMap;

use proptest::prelude::*;

use altgamma::egfseries::TruncatedSeries;
use altgamma::exactpoly::{rat, ratio, Monomial, Poly, Var};
use altgamma::grammar::{BuiltinGrammar, Grammar};
use altgamma::verify::gamma_extract;

fn poly_in(vars: &'static [&'static str], max_deg: u32) -> impl Strategy<Value = Poly> {
    let term = (
        proptest::collection::vec(0..=max_deg, vars.len()),
        -5i64..=5,
        1i64..=3,
    );
    proptest::collection::vec(term, 0..6).prop_map(move |terms| {
        Poly::from_terms(terms.into_iter().map(|(exps, num, den)| {
            let m = Monomial::from_pairs(vars.iter().zip(exps).map(|(v, e)| (Var::new(v), e)));
            (m, ratio(num, den))
        }))
    })
}

fn xy() -> impl Strategy<Value = Poly> {
    poly_in(&["x", "y"], 3)
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(poly_in(&["x"], 2), order + 1).prop_map(move |c| TruncatedSeries::new(order, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in xy(), b in xy(), c in xy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn derivations_obey_leibniz(a in poly_in(&["e", "x", "y"], 2), b in poly_in(&["e", "x", "y"], 2)) {
        for which in [BuiltinGrammar::G1, BuiltinGrammar::G2] {
            let g = Grammar::builtin(which);
            let d = |p: &Poly| g.derive(p).unwrap();
            prop_assert_eq!(d(&(&a + &b)), &d(&a) + &d(&b));
            prop_assert_eq!(d(&(&a * &b)), &(&d(&a) * &b) + &(&a * &d(&b)));
        }
    }

    #[test]
    fn substitution_is_a_homomorphism(a in xy(), b in xy(), s in poly_in(&["x"], 2), t in poly_in(&["x"], 2)) {
        let mut asg = BTreeMap::new();
        asg.insert(Var::new("x"), s);
        asg.insert(Var::new("y"), t);
        let sub = |p: &Poly| p.substitute(&asg).unwrap();
        prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
        prop_assert_eq!(sub(&(&a + &b)), &sub(&a) + &sub(&b));
    }

    #[test]
    fn reversal_is_an_involution(a in poly_in(&["x"], 4), extra in 0u32..3) {
        let x = Var::new("x");
        let m = a.degree_in(&x).finite().unwrap_or(0) + extra;
        let r = a.reversal(&x, m).unwrap();
        prop_assert_eq!(r.reversal(&x, m).unwrap(), a);
    }

    #[test]
    fn gamma_round_trip(g in proptest::collection::vec(-9i64..=9, 1..4), m_extra in 0u32..3, c in prop_oneof![Just(-4i64), Just(-2), Just(1), Just(3)]) {
        let m = 2 * (g.len() as u32 - 1) + m_extra;
        let x = Var::new("x");
        let f: Poly = g
            .iter()
            .enumerate()
            .map(|(k, &gk)| {
                Poly::monomial(&x, k as u32, rat(gk) * num_traits::pow(rat(c), k))
                    * (Poly::var("x") + Poly::one()).pow(m - 2 * k as u32)
            })
            .sum();
        let e = gamma_extract(&f, &rat(c), m).unwrap();
        prop_assert_eq!(e.reassemble(), f);
        for (k, &gk) in g.iter().enumerate() {
            prop_assert_eq!(&e.coeffs[k], &rat(gk));
        }
    }

    #[test]
    fn series_products(a in series(5), b in series(5), c in series(5)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn double_reciprocal(head in 1i64..=4, tail in series(6)) {
        let mut coeffs = tail.coeffs().to_vec();
        coeffs[0] = Poly::int(head);
        let a = TruncatedSeries::new(6, coeffs);
        let inv = a.reciprocal().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), TruncatedSeries::one(6));
        prop_assert_eq!(inv.reciprocal().unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in xy()) {
        prop_assert_eq!(Poly::from_json(&a.to_json()).unwrap(), a);
    }
}
