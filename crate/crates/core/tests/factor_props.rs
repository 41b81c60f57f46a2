mod common;

use polycomb::factor::{factor, is_irreducible, linear_factors};
use polycomb::IntPolynomial;
use proptest::prelude::*;

fn poly(max_deg: usize, h: i64) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-h..=h, 1..=max_deg + 1)
        .prop_map(|c| IntPolynomial::from_i64(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100_000))]

    #[test]
    fn reconstruction(p in poly(8, 1_000_000)) {
        let f = factor(&p).unwrap();
        prop_assert_eq!(f.reconstruct(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn irreducible_iff_single_simple_factor(p in poly(8, 1000)) {
        prop_assume!(!p.is_constant());
        prop_assert_eq!(is_irreducible(&p).unwrap(), factor(&p).unwrap().is_irreducible());
    }

    #[test]
    fn factors_divide_and_are_irreducible(a in poly(4, 30), b in poly(4, 30), c in poly(3, 30)) {
        let p = &(&a * &b) * &c;
        let f = factor(&p).unwrap();
        for fp in &f.factors {
            prop_assert!(p.pseudo_rem(&fp.poly).unwrap().is_zero());
            prop_assert!(is_irreducible(&fp.poly).unwrap());
        }
        let total: usize = f.degrees().iter().sum();
        prop_assert_eq!(total, p.deg());
    }

    #[test]
    fn agrees_with_oracle_on_products(a in poly(2, 9), b in poly(2, 9), c in poly(2, 9)) {
        let p = &(&a * &b) * &c;
        let coeffs: Vec<i64> = p.coeffs().iter().map(|x| i64::try_from(x).unwrap()).collect();
        prop_assert_eq!(common::library_shape(&factor(&p).unwrap()), common::oracle_factor(&coeffs));
    }

    #[test]
    fn linear_factors_are_the_degree_one_factors(p in poly(6, 200)) {
        prop_assume!(!p.is_constant());
        let mut from_factor: Vec<IntPolynomial> =
            factor(&p).unwrap().factors.into_iter().filter(|f| f.poly.deg() == 1).map(|f| f.poly).collect();
        from_factor.sort();
        prop_assert_eq!(linear_factors(&p).unwrap(), from_factor);
    }
}
